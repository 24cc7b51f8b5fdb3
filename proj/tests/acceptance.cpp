// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 shells out to the CLI binary; pass its path and the
// golden directory as argv[1] and argv[2].

#include "grpd/norm.hpp"
#include "grpd/rep.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace grpd;

namespace {

struct Named {
  std::string name;
  Gptr g;
};

Gptr deloop(const FiniteGroup& g) { return delooping(g); }

/// Groupoid suite shared by criteria 1 and 7. Component automorphism groups
/// are capped at order 8 to keep the exact linear-algebra cardinality of the
/// whole suite within its runtime budget.
std::vector<Named> build_registry() {
  FiniteGroup c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  FiniteGroup s3 = symmetric_group(3);
  std::vector<Named> reg;

  for (int n = 1; n <= 6; ++n)
    reg.push_back({"B C_" + std::to_string(n), deloop(cyclic_group(n))});
  reg.push_back({"B D_4", deloop(dihedral_group(4))});
  reg.push_back({"B Q_8", deloop(quaternion_group())});
  reg.push_back({"B S_3", deloop(s3)});
  reg.push_back({"B (C_2 x C_2)", deloop(direct_product(c2, c2))});
  reg.push_back({"B (C_2 x C_3)", deloop(direct_product(c2, c3))});

  for (int n = 0; n <= 7; ++n)
    reg.push_back({"discrete " + std::to_string(n), discrete_groupoid(n)});

  Gptr bc2 = deloop(c2), bc3 = deloop(c3), bc4 = deloop(c4), bs3 = deloop(s3);
  reg.push_back({"BC_2 + pt", disjoint_union({bc2, point_groupoid()})});
  reg.push_back({"BC_3 + 2 pts", disjoint_union({bc3, discrete_groupoid(2)})});
  reg.push_back({"BC_2 + BC_3", disjoint_union({bc2, bc3})});
  reg.push_back({"BC_4 + BC_2", disjoint_union({bc4, bc2})});
  reg.push_back({"2 pts + BC_2 + BC_3", disjoint_union({discrete_groupoid(2), bc2, bc3})});
  reg.push_back({"BC_3 + BC_3", disjoint_union({bc3, bc3})});
  reg.push_back({"BC_2 + BC_2 + BC_2", disjoint_union({bc2, bc2, bc2})});
  reg.push_back({"BC_4 + pt", disjoint_union({bc4, point_groupoid()})});

  reg.push_back({"BC_2 x discrete 3", product(bc2, discrete_groupoid(3))});
  reg.push_back({"discrete 2 x discrete 3", product(discrete_groupoid(2), discrete_groupoid(3))});
  reg.push_back({"BC_3 x discrete 2", product(bc3, discrete_groupoid(2))});
  reg.push_back({"BC_2 x BC_2", product(bc2, bc2)});
  reg.push_back({"BC_2 x BC_3", product(bc2, bc3)});
  reg.push_back({"BS_3 x pt", product(bs3, point_groupoid())});

  reg.push_back({"C_3 // C_3", conjugation_groupoid(c3)});
  reg.push_back({"C_4 // C_4", conjugation_groupoid(c4)});
  reg.push_back({"S_3 // S_3", conjugation_groupoid(s3)});
  reg.push_back({"V // V", conjugation_groupoid(direct_product(c2, c2))});

  reg.push_back({"C_2 swapping 2 points",
                 action_groupoid(c2, 2, [](int e, int s) { return e ? 1 - s : s; })});
  {
    // S_3 on the 3 cosets of a point stabilizer: the natural action
    int t = 0;
    while (s3.element_order(t) != 2) ++t;
    std::vector<int> sub = subgroup_closure(s3, {t});
    std::vector<bool> in_sub(s3.order, false);
    for (int s : sub) in_sub[s] = true;
    std::vector<int> coset_of(s3.order, -1), reps;
    for (int e = 0; e < s3.order; ++e) {
      if (coset_of[e] >= 0) continue;
      int c = static_cast<int>(reps.size());
      reps.push_back(e);
      for (int s = 0; s < s3.order; ++s)
        if (in_sub[s]) coset_of[s3.mul[e][s]] = c;
    }
    reg.push_back({"S_3 on 3 points",
                   action_groupoid(s3, 3, [s3, coset_of, reps](int e, int c) {
                     return coset_of[s3.mul[e][reps[c]]];
                   })});
  }
  reg.push_back({"C_3 torsor", action_groupoid(c3, 3, [c3](int e, int s) { return c3.mul[e][s]; })});
  reg.push_back({"C_4 torsor", action_groupoid(c4, 4, [c4](int e, int s) { return c4.mul[e][s]; })});
  reg.push_back({"S_3 torsor", action_groupoid(s3, 6, [s3](int e, int s) { return s3.mul[e][s]; })});

  reg.push_back({"L BC_4", free_loop(bc4).grpd});
  reg.push_back({"L BS_3", free_loop(bs3).grpd});
  reg.push_back({"L discrete 2", free_loop(discrete_groupoid(2)).grpd});
  reg.push_back({"L (BC_2 + pt)", free_loop(disjoint_union({bc2, point_groupoid()})).grpd});
  reg.push_back({"L_2 BS_3", p_free_loop(bs3, 2).grpd});
  reg.push_back({"L_2 BC_4", p_free_loop(bc4, 2).grpd});
  reg.push_back({"L_3 BS_3", p_free_loop(bs3, 3).grpd});
  reg.push_back({"L_2 BC_2", p_free_loop(bc2, 2).grpd});
  reg.push_back({"L_2 BC_3", p_free_loop(bc3, 2).grpd});
  reg.push_back({"L_3 BC_6", p_free_loop(deloop(cyclic_group(6)), 3).grpd});

  return reg;
}

GroupoidMap inclusion_of(const FiniteGroup& g, const Gptr& bg, const std::vector<int>& elems,
                         FiniteGroup* sub_out = nullptr) {
  SubgroupEmbedding emb = subgroup_as_group(g, elems);
  if (sub_out) *sub_out = emb.sub;
  return delooping_map(deloop(emb.sub), bg, emb.images);
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  std::string description;
  std::function<std::string()> run;  // returns extra detail; throws on failure
};

struct failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw failure(what);
}

std::string crit1_cardinality() {
  std::vector<Named> reg = build_registry();
  require(reg.size() >= 50, "registry has fewer than 50 groupoids");
  for (int n = 1; n <= 6; ++n)
    require(cardinality(deloop(cyclic_group(n))) == Rational(1, n),
            "delooping cardinality wrong at C_" + std::to_string(n));
  require(cardinality(deloop(quaternion_group())) == Rational(1, 8),
          "delooping cardinality wrong at Q_8");
  require(cardinality(conjugation_groupoid(symmetric_group(3))) == Rational(1),
          "S_3 // S_3 does not have cardinality 1");
  for (const Named& e : reg) {
    int pi0 = skeletize(e.g).num_components();
    require(cardinality(free_loop(e.g).grpd) == Rational(pi0),
            "free loop cardinality != #pi0 at " + e.name);
  }
  return std::to_string(reg.size()) + " groupoids";
}

std::string crit2_spans() {
  struct Entry {
    Span s;
    QMat lin;
  };
  // spans grouped by shared feet so that plenty of composable pairs exist;
  // all automorphism groups have order <= 12
  std::vector<Entry> pool;
  Gptr pt = point_groupoid();
  std::vector<FiniteGroup> groups = {symmetric_group(3), cyclic_group(4), cyclic_group(6),
                                     dihedral_group(4), dihedral_group(6)};
  std::vector<std::pair<int, int>> composable;  // indices into pool
  for (const FiniteGroup& g : groups) {
    Gptr bg = deloop(g);
    size_t first = pool.size();
    for (const auto& elems : all_subgroups(g)) {
      GroupoidMap inc = inclusion_of(g, bg, elems);
      Span fwd = span_from_map_fwd(inc);
      Span bwd = span_from_map_bwd(inc);
      pool.push_back({fwd, linearize(fwd)});
      pool.push_back({bwd, linearize(bwd)});
    }
    GroupoidMap term = constant_map(bg, pt);
    Span tf = span_from_map_fwd(term), tb = span_from_map_bwd(term);
    pool.push_back({tf, linearize(tf)});
    pool.push_back({tb, linearize(tb)});
    for (size_t i = first; i < pool.size(); ++i)
      for (size_t j = first; j < pool.size(); ++j)
        if (same_groupoid(pool[i].s.right_foot, pool[j].s.left_foot))
          composable.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  std::mt19937 rng(12345);
  std::shuffle(composable.begin(), composable.end(), rng);
  int checked = 0;
  for (auto [i, j] : composable) {
    if (checked >= 120) break;
    Span comp = span_compose(pool[i].s, pool[j].s);
    require(linearize(comp) == pool[j].lin * pool[i].lin,
            "linearize(compose) != matrix product");
    ++checked;
  }
  require(checked >= 100, "fewer than 100 composable span pairs");
  return std::to_string(checked) + " span pairs";
}

std::string crit3_norm() {
  std::vector<std::pair<GroupoidMap, int>> instances;  // (map, system dimension)
  Gptr pt = point_groupoid();

  std::vector<FiniteGroup> groups = {symmetric_group(3),
                                     cyclic_group(4),
                                     cyclic_group(6),
                                     dihedral_group(4),
                                     quaternion_group(),
                                     direct_product(cyclic_group(2), cyclic_group(2))};
  for (const FiniteGroup& g : groups) {
    Gptr bg = deloop(g);
    for (const auto& elems : all_subgroups(g)) {
      GroupoidMap inc = inclusion_of(g, bg, elems);
      for (int d : {1, 2, 3}) instances.push_back({inc, d});
      if (g.order <= 6)
        for (int d : {4, 6}) instances.push_back({inc, d});
    }
  }

  std::vector<Gptr> small = {pt,
                             discrete_groupoid(2),
                             discrete_groupoid(5),
                             deloop(cyclic_group(2)),
                             deloop(cyclic_group(3)),
                             disjoint_union({deloop(cyclic_group(2)), point_groupoid()}),
                             disjoint_union({deloop(cyclic_group(2)), deloop(cyclic_group(3))})};
  for (const Gptr& x : small) {
    GroupoidMap id = identity_map(x);
    GroupoidMap term = constant_map(x, pt);
    for (int d : {1, 2, 3, 4, 5, 6}) {
      instances.push_back({id, d});
      instances.push_back({term, d});
    }
  }
  {
    Gptr bc4 = deloop(cyclic_group(4));
    Gptr bv = deloop(direct_product(cyclic_group(2), cyclic_group(2)));
    for (int d : {1, 2, 3}) {
      instances.push_back({constant_map(bc4, pt), d});
      instances.push_back({constant_map(bv, pt), d});
    }
  }

  require(instances.size() >= 200,
          "only " + std::to_string(instances.size()) + " norm instances");
  for (const auto& [f, d] : instances) {
    LocalSystem sys = constant_system(f.source, d);
    ShriekToStar sts = shriek_to_star(f, sys);
    require(sts.map.invertible(), "norm not invertible");
    require(dualizing_comparison(f, sys).comparison.invertible(),
            "dualizing comparison not invertible");
    LinearMapOfSystems direct = norm_direct(f, sys, sts.push_left, sts.push_right);
    require(sts.map.comps == direct.comps, "structural norm != direct norm");
  }
  return std::to_string(instances.size()) + " (map, system) instances";
}

std::string crit4_beck_chevalley() {
  int checked = 0;
  std::vector<FiniteGroup> groups = {symmetric_group(3), cyclic_group(4),
                                     direct_product(cyclic_group(2), cyclic_group(2))};
  for (const FiniteGroup& g : groups) {
    Gptr bg = deloop(g);
    std::vector<GroupoidMap> incs;
    for (const auto& elems : all_subgroups(g)) incs.push_back(inclusion_of(g, bg, elems));
    for (const GroupoidMap& f : incs)
      for (const GroupoidMap& h : incs) {
        PullbackSquare sq = make_pullback_square(f, h);
        int d = 1 + (checked % 2);
        LocalSystem sys = constant_system(f.source, d);
        LocalSystem pulled = pullback_system(sq.pb.to_left, sys);
        PushforwardData pf_f = pushforward_left(f, sys);
        PushforwardData pf_pi = pushforward_left(sq.pb.to_right, pulled);
        require(beck_chevalley_shriek(sq, sys, pf_f, pf_pi).invertible(),
                "colimit base change not invertible");
        PushforwardData pr_f = pushforward_right(f, sys);
        PushforwardData pr_pi = pushforward_right(sq.pb.to_right, pulled);
        require(beck_chevalley_star(sq, sys, pr_f, pr_pi).invertible(),
                "limit base change not invertible");
        ++checked;
      }
  }
  require(checked >= 50, "fewer than 50 pullback squares");
  return std::to_string(checked) + " pullback squares";
}

std::string crit5_induction() {
  std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"S_3", symmetric_group(3)}, {"S_4", symmetric_group(4)}, {"D_4", dihedral_group(4)},
      {"Q_8", quaternion_group()}, {"A_4", alternating_group(4)}};
  int instances = 0;
  for (const auto& [gname, g] : groups) {
    Gptr bg = deloop(g);
    for (const auto& elems : all_subgroups(g)) {
      FiniteGroup h;
      GroupoidMap inc = inclusion_of(g, bg, elems, &h);
      std::vector<RationalRep> reps = {trivial_rep(h), regular_rep(h)};
      // a nontrivial permutation representation whenever one exists: cosets
      // of the subgroup generated by the first non-identity element
      if (h.order > 1) {
        for (int e = 0; e < h.order; ++e)
          if (e != h.identity) {
            reps.push_back(coset_rep(h, subgroup_closure(h, {e})));
            break;
          }
      } else {
        reps.push_back(coset_rep(h, {h.identity}));
      }
      for (const RationalRep& rho : reps) {
        require(verify_induction_square(inc, rho).ok,
                "induction square failed in " + gname);
        for (long p : {2L, 3L})
          require(p_typical_character_square(inc, rho, p).ok,
                  "p-typical square failed in " + gname);
        ++instances;
      }
    }
  }
  require(instances >= 100, "fewer than 100 induction instances");
  return std::to_string(instances) + " (subgroup, representation) instances";
}

std::string crit6_chromatic() {
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (int n = 1; n <= 8; ++n) groups.push_back({"C_" + std::to_string(n), cyclic_group(n)});
  groups.push_back({"S_3", symmetric_group(3)});
  groups.push_back({"S_4", symmetric_group(4)});
  groups.push_back({"A_4", alternating_group(4)});
  groups.push_back({"D_4", dihedral_group(4)});
  groups.push_back({"D_6", dihedral_group(6)});
  groups.push_back({"Q_8", quaternion_group()});
  groups.push_back({"C_2 x C_2", direct_product(cyclic_group(2), cyclic_group(2))});
  groups.push_back({"C_2 x C_4", direct_product(cyclic_group(2), cyclic_group(4))});

  for (const auto& [name, g] : groups) {
    Gptr bg = deloop(g);
    for (long p : {2L, 3L, 5L})
      for (int n = 0; n <= 3; ++n) {
        Rational got = chromatic_cardinality(bg, p, n);
        require(got == chromatic_cardinality_oracle(g, p, n),
                "chromatic cardinality != commuting-tuple oracle at " + name);
        if (n >= 1)
          require(is_p_local_integer(got, p), "denominator not coprime to p at " + name);
      }
  }
  for (long p : {2L, 3L, 5L}) {
    Gptr bcp = deloop(cyclic_group(static_cast<int>(p)));
    Rational expect = 1;
    for (int n = 1; n <= 3; ++n) {
      require(chromatic_cardinality(bcp, p, n) == expect, "BC_p golden failed");
      expect *= Rational(p);
    }
  }
  Gptr bs3 = deloop(symmetric_group(3));
  require(chromatic_cardinality(bs3, 2, 1) == Rational(2, 3), "BS_3 height-1 golden failed");
  require(chromatic_cardinality(bs3, 2, 2) == Rational(5, 3), "BS_3 height-2 golden failed");
  return std::to_string(groups.size()) + " groups, p in {2,3,5}, n <= 3";
}

std::string crit7_linear_cardinality() {
  std::vector<Named> reg = build_registry();
  for (const Named& e : reg)
    require(cardinality_linear(e.g) == cardinality(e.g),
            "linear cardinality mismatch at " + e.name);
  return std::to_string(reg.size()) + " groupoids";
}

// ---------------------------------------------------------------------------
// criterion 8: CLI goldens

std::string g_cli_path, g_golden_dir;

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw failure("cannot launch the CLI");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw failure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string crit8_cli() {
  require(!g_cli_path.empty() && !g_golden_dir.empty(),
          "pass the CLI path and golden directory as arguments");
  RunResult s1 = run_cli("suite");
  RunResult s2 = run_cli("suite");
  require(s1.code == 0, "suite exited nonzero");
  require(s1.out == s2.out, "suite output is not byte-identical across runs");
  require(s1.out == read_file(g_golden_dir + "/suite.txt"),
          "suite output differs from the golden transcript");

  RunResult chrom = run_cli("chrom-card --p 2 --n 1 " + g_golden_dir + "/bs3.json");
  require(chrom.code == 0 && chrom.out == "2/3\n", "chrom-card example mismatch");
  RunResult card = run_cli("cardinality " + g_golden_dir + "/bc6.json");
  require(card.code == 0 && card.out == "1/6\n", "cardinality example mismatch");
  RunResult ind = run_cli("induce-check " + g_golden_dir + "/induce_sign.json");
  require(ind.code == 0 && ind.out == "PASS\ninduced 3 -1 0\nintegrated 3 -1 0\n",
          "induce-check example mismatch");

  require(run_cli("cardinality " + g_golden_dir + "/malformed.json").code == 2,
          "malformed input should exit 2");
  require(run_cli("no-such-subcommand").code == 2, "unknown subcommand should exit 2");
  require(run_cli("cardinality " + g_golden_dir + "/toolarge.json").code == 3,
          "oversized input should exit 3");
  return "suite transcript, 3 examples, 3 exit codes";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  if (argc > 2) g_golden_dir = argv[2];

  std::vector<Criterion> criteria = {
      {1, "exact cardinalities and |L X| = #pi0 on the groupoid suite", crit1_cardinality},
      {2, "span composition linearizes to the matrix product", crit2_spans},
      {3, "norm invertible, dualizing invertible, structural = direct", crit3_norm},
      {4, "base change invertible on suite pullback squares", crit4_beck_chevalley},
      {5, "induced-character squares commute (free, 2-typical, 3-typical)", crit5_induction},
      {6, "chromatic cardinalities match the commuting-tuple oracle", crit6_chromatic},
      {7, "linear-algebra cardinality equals combinatorial cardinality", crit7_linear_cardinality},
      {8, "CLI goldens byte-identical, exit codes as documented", crit8_cli},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.description
              << " — " << detail << " (" << timing << ")" << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
