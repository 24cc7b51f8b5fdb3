// Command-line front end: exact computations on finite groupoids with a
// JSON input schema (see README). Exit codes: 0 success, 2 parse error,
// 3 capacity error, 4 theorem violation / internal inconsistency.

#include "grpd/json_io.hpp"
#include "grpd/norm.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace grpd;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_document(const std::string& path) {
  json j = parse_json_text(read_input(path));
  check_schema(j);
  return j;
}

void print_matrix_plain(const QMat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k) {
      if (k) std::cout << ' ';
      std::cout << to_string(m(i, k));
    }
    std::cout << '\n';
  }
}

// ---------------------------------------------------------------------------
// subcommands

int run_cardinality(const std::string& input, bool json_out) {
  Gptr x = groupoid_from_json(field(load_document(input), "groupoid"));
  Rational c = cardinality(x);
  if (json_out) {
    ojson out{{"schema", kSchemaVersion}, {"cardinality", to_string(c)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_string(c) << '\n';
  }
  return 0;
}

int run_loop(const std::string& input, long p, int h, bool json_out) {
  Gptr x = groupoid_from_json(field(load_document(input), "groupoid"));
  Gptr lx;
  if (p == 0) {
    if (h != 1) throw parse_error("the plain free loop space has no iteration count; give --p");
    lx = free_loop(x).grpd;
  } else {
    PAdicLoopParams params{p, h};
    params.validate();
    lx = iterated_p_free_loop(x, params);
  }
  int comps = skeletize(lx).num_components();
  Rational c = cardinality(lx);
  if (json_out) {
    ojson out{{"schema", kSchemaVersion},
              {"objects", lx->num_objects()},
              {"components", comps},
              {"cardinality", to_string(c)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "objects " << lx->num_objects() << '\n'
              << "components " << comps << '\n'
              << "cardinality " << to_string(c) << '\n';
  }
  return 0;
}

int run_span(const std::string& input, bool json_out) {
  Span s = span_from_json(field(load_document(input), "span"));
  QMat m = linearize(s);
  if (json_out) {
    ojson out{{"schema", kSchemaVersion},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"matrix", matrix_to_json(m)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "rows " << m.rows() << " cols " << m.cols() << '\n';
    print_matrix_plain(m);
  }
  return 0;
}

int run_norm_check(const std::string& input, bool json_out) {
  json doc = load_document(input);
  GroupoidMap f = map_from_json(field(doc, "map"));
  LocalSystem sys = system_from_json(field(doc, "system"), f.source);

  ShriekToStar sts = shriek_to_star(f, sys);
  DualizingData dd = dualizing_comparison(f, sys);
  LinearMapOfSystems direct = norm_direct(f, sys, sts.push_left, sts.push_right);
  bool inv = sts.map.invertible();
  bool dinv = dd.comparison.invertible();
  bool agree = sts.map.comps == direct.comps;
  if (json_out) {
    ojson mats = ojson::array();
    for (const auto& c : sts.map.comps) mats.push_back(matrix_to_json(c));
    ojson out{{"schema", kSchemaVersion},
              {"norm_invertible", inv},
              {"dualizing_invertible", dinv},
              {"matches_direct", agree},
              {"components", std::move(mats)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "norm invertible: " << (inv ? "yes" : "no") << '\n'
              << "dualizing comparison invertible: " << (dinv ? "yes" : "no") << '\n'
              << "structural equals direct: " << (agree ? "yes" : "no") << '\n';
    for (size_t i = 0; i < sts.map.comps.size(); ++i) {
      std::cout << "component " << i << '\n';
      print_matrix_plain(sts.map.comps[i]);
    }
  }
  if (!inv || !dinv || !agree)
    throw theorem_violation("norm check failed: the engine violated a guaranteed identity");
  return 0;
}

int run_bc_check(const std::string& input, bool json_out) {
  json doc = load_document(input);
  GroupoidMap f = map_from_json(field(doc, "f"));
  GroupoidMap g = map_from_json(field(doc, "g"));
  if (!same_groupoid(f.target, g.target))
    throw parse_error("bc-check: the two maps must share a target");
  LocalSystem sys = system_from_json(field(doc, "system"), f.source);

  PullbackSquare sq = make_pullback_square(f, g);
  LocalSystem pulled = pullback_system(sq.pb.to_left, sys);
  PushforwardData pf_f = pushforward_left(f, sys);
  PushforwardData pf_pi = pushforward_left(sq.pb.to_right, pulled);
  bool shriek_inv = beck_chevalley_shriek(sq, sys, pf_f, pf_pi).invertible();
  PushforwardData pr_f = pushforward_right(f, sys);
  PushforwardData pr_pi = pushforward_right(sq.pb.to_right, pulled);
  bool star_inv = beck_chevalley_star(sq, sys, pr_f, pr_pi).invertible();
  if (json_out) {
    ojson out{{"schema", kSchemaVersion},
              {"colimit_invertible", shriek_inv},
              {"limit_invertible", star_inv}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "colimit base change invertible: " << (shriek_inv ? "yes" : "no") << '\n'
              << "limit base change invertible: " << (star_inv ? "yes" : "no") << '\n';
  }
  if (!shriek_inv || !star_inv)
    throw theorem_violation("base change failed: the engine violated a guaranteed identity");
  return 0;
}

int run_induce_check(const std::string& input, long p, bool json_out) {
  json doc = load_document(input);
  FiniteGroup g = group_from_json(field(doc, "group"));
  std::vector<int> elems = int_list(field(doc, "subgroup"), "subgroup");
  SubgroupEmbedding emb = subgroup_as_group(g, elems);
  GroupoidMap inc = delooping_map(delooping(emb.sub), delooping(g), emb.images);
  RationalRep rho = rep_from_json(field(doc, "rep"), emb.sub);

  SquareReport rep =
      p == 0 ? verify_induction_square(inc, rho) : p_typical_character_square(inc, rho, p);
  auto render = [](const std::vector<Rational>& vs) {
    std::string s;
    for (const auto& v : vs) {
      if (!s.empty()) s += ' ';
      s += to_string(v);
    }
    return s;
  };
  if (json_out) {
    ojson reps = ojson::array(), ints = ojson::array();
    for (const auto& v : rep.via_representations) reps.push_back(to_string(v));
    for (const auto& v : rep.via_integration) ints.push_back(to_string(v));
    ojson out{{"schema", kSchemaVersion},
              {"verdict", rep.ok ? "PASS" : "FAIL"},
              {"induced", std::move(reps)},
              {"integrated", std::move(ints)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (rep.ok ? "PASS" : "FAIL") << '\n'
              << "induced " << render(rep.via_representations) << '\n'
              << "integrated " << render(rep.via_integration) << '\n';
  }
  if (!rep.ok)
    throw theorem_violation("induced character square failed: internal inconsistency");
  return 0;
}

int run_chrom_card(const std::string& input, long p, int n, bool json_out) {
  Gptr x = groupoid_from_json(field(load_document(input), "groupoid"));
  Rational c = chromatic_cardinality(x, p, n);
  if (json_out) {
    ojson out{{"schema", kSchemaVersion},
              {"p", p},
              {"n", n},
              {"cardinality", to_string(c)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << to_string(c) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// the example suite

struct Check {
  std::string name;
  std::function<bool()> run;
};

int element_of_order(const FiniteGroup& g, int k) {
  for (int e = 0; e < g.order; ++e)
    if (g.element_order(e) == k) return e;
  throw theorem_violation("suite: no element of the requested order");
}

GroupoidMap subgroup_inclusion(const FiniteGroup& g, const std::vector<int>& elems,
                               FiniteGroup* sub_out = nullptr) {
  SubgroupEmbedding emb = subgroup_as_group(g, elems);
  if (sub_out) *sub_out = emb.sub;
  return delooping_map(delooping(emb.sub), delooping(g), emb.images);
}

std::vector<Check> build_suite() {
  std::vector<Check> checks;
  auto add = [&checks](std::string name, std::function<bool()> fn) {
    checks.push_back({std::move(name), std::move(fn)});
  };

  // -- groupoid layer ------------------------------------------------------
  add("permutation closure of a transposition has order 2", [] {
    return group_from_permutations({{1, 0}}).order == 2;
  });
  add("permutation closure of a transposition and a 3-cycle has order 6", [] {
    return group_from_permutations({{1, 0, 2}, {1, 2, 0}}).order == 6;
  });
  add("empty generator list gives the trivial group", [] {
    return group_from_permutations({}).order == 1;
  });
  add("delooping sizes: trivial group and C_2", [] {
    Gptr bt = delooping(trivial_group()), bc2 = delooping(cyclic_group(2));
    return bt->num_objects() == 1 && bt->num_morphisms() == 1 && bc2->num_objects() == 1 &&
           bc2->num_morphisms() == 2;
  });
  add("delooping of S_3 composes by the multiplication table", [] {
    FiniteGroup s3 = symmetric_group(3);
    Gptr b = delooping(s3);
    for (int a = 0; a < 6; ++a)
      for (int c = 0; c < 6; ++c)
        if (b->compose(a, c) != s3.mul[a][c]) return false;
    return true;
  });
  add("trivial group acting on 3 points gives a discrete groupoid", [] {
    Gptr d = action_groupoid(trivial_group(), 3, [](int, int s) { return s; });
    return d->num_objects() == 3 && cardinality(d) == Rational(3);
  });
  add("C_2 translating itself is connected with trivial automorphisms", [] {
    FiniteGroup c2 = cyclic_group(2);
    Gptr t = action_groupoid(c2, 2, [&c2](int g, int s) { return c2.mul[g][s]; });
    Skeleton sk = skeletize(t);
    return sk.num_components() == 1 && sk.components[0].aut.order == 1 &&
           cardinality(t) == Rational(1);
  });
  add("S_3 conjugating itself has centralizers of orders 6, 2, 3", [] {
    Skeleton sk = skeletize(conjugation_groupoid(symmetric_group(3)));
    std::vector<int> orders;
    for (const auto& c : sk.components) orders.push_back(c.aut.order);
    std::sort(orders.begin(), orders.end());
    return orders == std::vector<int>{2, 3, 6};
  });
  add("skeleton of a discrete 4-point groupoid has 4 trivial components", [] {
    Skeleton sk = skeletize(discrete_groupoid(4));
    if (sk.num_components() != 4) return false;
    for (const auto& c : sk.components)
      if (c.aut.order != 1) return false;
    return true;
  });
  add("skeleton of the delooping of S_3 is one component of order 6", [] {
    Skeleton sk = skeletize(delooping(symmetric_group(3)));
    return sk.num_components() == 1 && sk.components[0].aut.order == 6;
  });
  add("skeleton of BC_2 + BC_3 has components of orders 2 and 3", [] {
    Skeleton sk = skeletize(disjoint_union({delooping(cyclic_group(2)),
                                            delooping(cyclic_group(3))}));
    return sk.num_components() == 2 && sk.components[0].aut.order == 2 &&
           sk.components[1].aut.order == 3;
  });
  add("cardinality of a delooping is 1 over the group order", [] {
    for (int n : {1, 2, 3, 4, 5, 6, 8})
      if (cardinality(delooping(cyclic_group(n))) != Rational(1, n)) return false;
    return cardinality(delooping(symmetric_group(4))) == Rational(1, 24);
  });
  add("cardinality of a discrete groupoid counts its points", [] {
    return cardinality(discrete_groupoid(7)) == Rational(7);
  });
  add("cardinality of the conjugation groupoid of S_3 is 1", [] {
    return cardinality(conjugation_groupoid(symmetric_group(3))) == Rational(1);
  });
  add("product with a point is an equivalence", [] {
    Gptr bs3 = delooping(symmetric_group(3));
    return equivalence_check(product(bs3, point_groupoid()), bs3);
  });
  add("BC_2 x BC_2 is the Klein four-group delooping", [] {
    Gptr b = delooping(cyclic_group(2));
    Gptr bb = product(b, b);
    return bb->num_objects() == 1 && bb->num_morphisms() == 4 &&
           groups_isomorphic(skeletize(bb).components[0].aut,
                             direct_product(cyclic_group(2), cyclic_group(2)));
  });
  add("cardinality is multiplicative: BC_2 x discrete 3 has cardinality 3/2", [] {
    return cardinality(product(delooping(cyclic_group(2)), discrete_groupoid(3))) ==
           Rational(3, 2);
  });
  add("pullback over a point is the product", [] {
    Gptr x = delooping(cyclic_group(2)), y = discrete_groupoid(3), pt = point_groupoid();
    Pullback pb = homotopy_pullback(constant_map(x, pt), constant_map(y, pt));
    return equivalence_check(pb.total, product(x, y)) && cardinality(pb.total) == Rational(3, 2);
  });
  add("pullback of BC_2 -> BS_3 <- pt is the 3-element coset set", [] {
    FiniteGroup s3 = symmetric_group(3);
    Gptr bs3 = delooping(s3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    Pullback pb = homotopy_pullback(incl, point_inclusion(point_groupoid(), bs3, 0));
    Skeleton sk = skeletize(pb.total);
    if (pb.total->num_objects() != 6 || sk.num_components() != 3) return false;
    for (const auto& c : sk.components)
      if (c.aut.order != 1) return false;
    return cardinality(pb.total) == Rational(3);
  });
  add("self pullback of the diagonal recovers the free loop groupoid", [] {
    Gptr x = disjoint_union({delooping(cyclic_group(3)), discrete_groupoid(1)});
    Gptr xx = product(x, x);
    int my = x->num_morphisms();
    std::vector<int> omap(x->num_objects()), mmap(x->num_morphisms());
    for (int o = 0; o < x->num_objects(); ++o) omap[o] = o * x->num_objects() + o;
    for (int m = 0; m < x->num_morphisms(); ++m) mmap[m] = m * my + m;
    GroupoidMap diag(x, xx, omap, mmap);
    Pullback pb = homotopy_pullback(diag, diag);
    return equivalence_check(pb.total, free_loop(x).grpd);
  });
  add("fibers of the identity are contractible", [] {
    Gptr x = conjugation_groupoid(symmetric_group(3));
    GroupoidMap id = identity_map(x);
    for (int y = 0; y < x->num_objects(); ++y) {
      Skeleton sk = skeletize(homotopy_fiber(id, y).grpd);
      if (sk.num_components() != 1 || sk.components[0].aut.order != 1) return false;
    }
    return true;
  });
  add("fiber of BC_2 -> BS_3 is the discrete coset set of cardinality 3", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    Fiber f = homotopy_fiber(incl, 0);
    Skeleton sk = skeletize(f.grpd);
    return f.grpd->num_objects() == 6 && sk.num_components() == 3 &&
           cardinality(f.grpd) == Rational(3);
  });
  add("fiber over a point of the terminal map is the groupoid itself", [] {
    Gptr x = conjugation_groupoid(symmetric_group(3));
    return equivalence_check(homotopy_fiber(constant_map(x, point_groupoid()), 0).grpd, x);
  });
  add("equivalence check separates C_4 from the Klein four-group", [] {
    Gptr x = conjugation_groupoid(symmetric_group(3));
    return equivalence_check(x, x) &&
           !equivalence_check(delooping(cyclic_group(4)),
                              delooping(direct_product(cyclic_group(2), cyclic_group(2)))) &&
           !equivalence_check(discrete_groupoid(2), delooping(cyclic_group(2)));
  });

  // -- loop layer ----------------------------------------------------------
  add("free loops of a discrete groupoid are the identity loops", [] {
    return equivalence_check(free_loop(discrete_groupoid(3)).grpd, discrete_groupoid(3));
  });
  add("free loops of a delooping form the conjugation groupoid", [] {
    FiniteGroup s3 = symmetric_group(3);
    return equivalence_check(free_loop(delooping(s3)).grpd, conjugation_groupoid(s3));
  });
  add("free loop cardinality of the delooping of S_3 is 1", [] {
    return cardinality(free_loop(delooping(symmetric_group(3))).grpd) == Rational(1);
  });
  add("2-typical loops of BC_3 are just BC_3", [] {
    Gptr bc3 = delooping(cyclic_group(3));
    return equivalence_check(p_free_loop(bc3, 2).grpd, bc3);
  });
  add("2-typical loops of BC_2: two objects with C_2 automorphisms, cardinality 1", [] {
    LoopGroupoid lg = p_free_loop(delooping(cyclic_group(2)), 2);
    Skeleton sk = skeletize(lg.grpd);
    if (lg.grpd->num_objects() != 2 || sk.num_components() != 2) return false;
    for (const auto& c : sk.components)
      if (c.aut.order != 2) return false;
    return cardinality(lg.grpd) == Rational(1);
  });
  add("2-typical loops of BS_3 have cardinality 2/3", [] {
    return cardinality(p_free_loop(delooping(symmetric_group(3)), 2).grpd) == Rational(2, 3);
  });
  add("zero loop iterations return the groupoid unchanged", [] {
    Gptr x = conjugation_groupoid(symmetric_group(3));
    return same_groupoid(iterated_p_free_loop(x, {2, 0}), x);
  });
  add("iterated p-typical loops of BC_p have cardinality p^(n-1)", [] {
    for (long p : {2L, 3L, 5L}) {
      Gptr bcp = delooping(cyclic_group(static_cast<int>(p)));
      Rational expect = 1;
      for (int n = 1; n <= 3; ++n) {
        if (cardinality(iterated_p_free_loop(bcp, {p, n})) != expect) return false;
        expect *= Rational(p);
      }
    }
    return true;
  });
  add("twice-iterated 2-typical loops of BS_3 have cardinality 5/3", [] {
    return cardinality(iterated_p_free_loop(delooping(symmetric_group(3)), {2, 2})) ==
           Rational(5, 3);
  });
  add("commuting 1-tuples of C_2 form two objects with C_2 automorphisms", [] {
    Gptr t = commuting_tuples_direct(cyclic_group(2), {2, 1});
    Skeleton sk = skeletize(t);
    return t->num_objects() == 2 && sk.num_components() == 2 &&
           sk.components[0].aut.order == 2;
  });
  add("commuting 2-power pairs in S_3: 10 objects, cardinality 5/3", [] {
    Gptr t = commuting_tuples_direct(symmetric_group(3), {2, 2});
    return t->num_objects() == 10 && cardinality(t) == Rational(5, 3);
  });
  add("commuting pairs in C_3 at p = 3: 9 objects, cardinality 3", [] {
    Gptr t = commuting_tuples_direct(cyclic_group(3), {3, 2});
    return t->num_objects() == 9 && cardinality(t) == Rational(3);
  });
  add("iterated loops agree with the direct commuting-tuple model", [] {
    for (const FiniteGroup& g : {cyclic_group(4), symmetric_group(3), dihedral_group(4)})
      for (long p : {2L, 3L})
        for (int h = 1; h <= 2; ++h)
          if (!equivalence_check(iterated_p_free_loop(delooping(g), {p, h}),
                                 commuting_tuples_direct(g, {p, h})))
            return false;
    return true;
  });
  add("the loop functor sends the identity to the identity", [] {
    Gptr x = delooping(symmetric_group(3));
    GroupoidMap lid = loop_map(identity_map(x), {2, 1});
    return same_map(lid, identity_map(lid.source));
  });
  add("2-typical loop map of BC_2 -> BS_3 has discrete fibers", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    GroupoidMap lm = loop_map(incl, {2, 1});
    for (int y = 0; y < lm.target->num_objects(); ++y) {
      Skeleton sk = skeletize(homotopy_fiber(lm, y).grpd);
      for (const auto& c : sk.components)
        if (c.aut.order != 1) return false;
    }
    return true;
  });
  add("the loop functor preserves composition", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    GroupoidMap to_pt = constant_map(incl.target, point_groupoid());
    PAdicLoopParams params{2, 1};
    return same_map(loop_map(compose_maps(to_pt, incl), params),
                    compose_maps(loop_map(to_pt, params), loop_map(incl, params)));
  });

  // -- span layer ----------------------------------------------------------
  add("the identity span linearizes to the identity matrix", [] {
    Gptr x = disjoint_union({delooping(cyclic_group(2)), discrete_groupoid(2)});
    QMat m = linearize(span_identity(x));
    return m.rows() == 3 && m.is_identity();
  });
  add("composing with the identity span changes nothing", [] {
    FiniteGroup s3 = symmetric_group(3);
    Span s = span_from_map_fwd(subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)}));
    QMat m = linearize(s);
    return linearize(span_compose(span_identity(s.left_foot), s)) == m &&
           linearize(span_compose(s, span_identity(s.right_foot))) == m;
  });
  add("backward spans linearize to component-pullback matrices", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap lincl =
        free_loop_map(subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)}));
    QMat m = linearize(span_from_map_bwd(lincl));
    Skeleton sh = skeletize(lincl.source), sg = skeletize(lincl.target);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        bool maps_into = sg.component_of[lincl.obj_map[sh.components[i].rep]] == j;
        if (m(i, j) != Rational(maps_into ? 1 : 0)) return false;
      }
    return true;
  });
  add("restriction then induction matches the double coset count", [] {
    FiniteGroup s3 = symmetric_group(3);
    int t = element_of_order(s3, 2);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, t});
    QMat m = linearize(span_compose(span_from_map_fwd(incl), span_from_map_bwd(incl)));
    // Mackey oracle: sum over double cosets of |HgH| / |H|.
    Rational expected = 0;
    std::vector<bool> seen(6, false);
    for (int g = 0; g < 6; ++g) {
      if (seen[g]) continue;
      int size = 0;
      for (int a : {s3.identity, t})
        for (int b : {s3.identity, t}) {
          int x = s3.mul[s3.mul[a][g]][b];
          if (!seen[x]) {
            seen[x] = true;
            ++size;
          }
        }
      expected += Rational(size, 2);
    }
    return m.rows() == 1 && m(0, 0) == expected;
  });
  add("restriction of class functions reads off component images", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap lincl =
        free_loop_map(subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)}));
    ClassFunction phi{lincl.target, {Rational(10), Rational(20), Rational(30)}};
    ClassFunction res = restrict_along(lincl, phi);
    Skeleton sh = skeletize(lincl.source), sg = skeletize(lincl.target);
    for (int i = 0; i < sh.num_components(); ++i)
      if (res.values[i] != phi.values[sg.component_of[lincl.obj_map[sh.components[i].rep]]])
        return false;
    return restrict_along(identity_map(lincl.target), phi).values == phi.values;
  });
  add("integrating the constant 1 to a point gives the cardinality", [] {
    Gptr x = conjugation_groupoid(symmetric_group(3));
    ClassFunction total =
        integrate(constant_map(x, point_groupoid()), constant_class_function(x, 1));
    return total.values[0] == cardinality(x);
  });
  add("the sign class function of C_2 integrates to zero", [] {
    LoopGroupoid lbc2 = free_loop(delooping(cyclic_group(2)));
    ClassFunction sign{lbc2.grpd, {Rational(1), Rational(-1)}};
    return integrate(constant_map(lbc2.grpd, point_groupoid()), sign).values[0] == Rational(0);
  });
  add("the two-sided point span over a delooping linearizes to 1 over the order", [] {
    Gptr bg = delooping(symmetric_group(3));
    GroupoidMap to_pt = constant_map(bg, point_groupoid());
    Span s{point_groupoid(), point_groupoid(), bg, to_pt, to_pt};
    return linearize(s)(0, 0) == Rational(1, 6);
  });
  add("cardinality spans compose to the torsor groupoid with matrix [1]", [] {
    FiniteGroup g = symmetric_group(3);
    Gptr bg = delooping(g), pt = point_groupoid();
    Span s1{pt, bg, pt, identity_map(pt), constant_map(pt, bg)};
    Span s2 = span_from_map_fwd(constant_map(bg, pt));
    QMat m1 = linearize(s1), m2 = linearize(s2);
    Span composite = span_compose(s1, s2);
    return m1(0, 0) == Rational(6) && m2(0, 0) == Rational(1, 6) &&
           (m2 * m1)(0, 0) == Rational(1) && composite.apex->num_objects() == 6 &&
           cardinality(composite.apex) == Rational(1) &&
           linearize(composite)(0, 0) == Rational(1);
  });

  // -- local system layer --------------------------------------------------
  add("pullback of systems along the identity changes nothing", [] {
    Gptr bs3 = delooping(symmetric_group(3));
    LocalSystem reg = system_from_representation(bs3, regular_images(symmetric_group(3)));
    return pullback_system(identity_map(bs3), reg) == reg;
  });
  add("the regular system of S_3 restricted to C_2 has 3-dimensional invariants", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    LocalSystem reg = system_from_representation(incl.target, regular_images(s3));
    LocalSystem res = pullback_system(incl, reg);
    PushforwardData pr =
        pushforward_right(constant_map(incl.source, point_groupoid()), res);
    return pr.system.dims[0] == 3;
  });
  add("limits along BG -> pt compute invariants: regular S_3 gives dimension 1", [] {
    FiniteGroup s3 = symmetric_group(3);
    Gptr bs3 = delooping(s3);
    LocalSystem reg = system_from_representation(bs3, regular_images(s3));
    return pushforward_right(constant_map(bs3, point_groupoid()), reg).system.dims[0] == 1;
  });
  add("colimits along BG -> pt compute coinvariants: regular S_3 gives dimension 1", [] {
    FiniteGroup s3 = symmetric_group(3);
    Gptr bs3 = delooping(s3);
    LocalSystem reg = system_from_representation(bs3, regular_images(s3));
    return pushforward_left(constant_map(bs3, point_groupoid()), reg).system.dims[0] == 1;
  });
  add("pushforward of a two-point discrete system is the direct sum", [] {
    Gptr d2 = discrete_groupoid(2);
    LocalSystem sys(d2, {2, 3}, {QMat::identity(2), QMat::identity(3)});
    GroupoidMap f = constant_map(d2, point_groupoid());
    return pushforward_left(f, sys).system.dims[0] == 5 &&
           pushforward_right(f, sys).system.dims[0] == 5;
  });
  add("the colimit zigzag identity holds for the regular system of C_2", [] {
    FiniteGroup c2 = cyclic_group(2);
    Gptr bc2 = delooping(c2);
    GroupoidMap f = constant_map(bc2, point_groupoid());
    LocalSystem sys = system_from_representation(bc2, regular_images(c2));
    PushforwardData pf = pushforward_left(f, sys);
    LinearMapOfSystems u = unit_shriek(f, sys, pf);
    PushforwardData pf_pb = pushforward_left(f, pullback_system(f, pf.system));
    LinearMapOfSystems pushed_unit = whisker_pushforward(pf, pf_pb, u);
    LinearMapOfSystems c = counit_shriek(f, pf.system, pf_pb);
    LinearMapOfSystems round = compose_system_maps(c, pushed_unit);
    for (size_t i = 0; i < round.comps.size(); ++i)
      if (!round.comps[i].is_identity()) return false;
    return true;
  });
  add("the limit unit on the constant line of a delooping is the identity", [] {
    Gptr bg = delooping(symmetric_group(3));
    GroupoidMap f = constant_map(bg, point_groupoid());
    LocalSystem line = constant_system(point_groupoid(), 1);
    PushforwardData pr = pushforward_right(f, pullback_system(f, line));
    LinearMapOfSystems u = unit_star(f, line, pr);
    return u.comps[0].is_identity();
  });
  add("base change is invertible on the self square of C_2 in S_3", [] {
    FiniteGroup s3 = symmetric_group(3);
    GroupoidMap incl = subgroup_inclusion(s3, {s3.identity, element_of_order(s3, 2)});
    PullbackSquare sq = make_pullback_square(incl, incl);
    LocalSystem sys = constant_system(incl.source, 1);
    LocalSystem pulled = pullback_system(sq.pb.to_left, sys);
    PushforwardData pf_f = pushforward_left(incl, sys);
    PushforwardData pf_pi = pushforward_left(sq.pb.to_right, pulled);
    return beck_chevalley_shriek(sq, sys, pf_f, pf_pi).invertible();
  });
  add("base change on a product square has the expected dimensions", [] {
    Gptr x = disjoint_union({delooping(cyclic_group(2)), discrete_groupoid(1)});
    Gptr y = discrete_groupoid(2), pt = point_groupoid();
    GroupoidMap f = constant_map(x, pt), g = constant_map(y, pt);
    PullbackSquare sq = make_pullback_square(f, g);
    LocalSystem sys = constant_system(x, 2);
    LocalSystem pulled = pullback_system(sq.pb.to_left, sys);
    PushforwardData pf_f = pushforward_left(f, sys);
    PushforwardData pf_pi = pushforward_left(sq.pb.to_right, pulled);
    LinearMapOfSystems bc = beck_chevalley_shriek(sq, sys, pf_f, pf_pi);
    // both sides: one copy of f_! per point of y, of dimension #pi0(x) * dim
    for (const auto& c : bc.comps)
      if (c.rows() != 4 || c.cols() != 4) return false;
    return bc.invertible();
  });
  add("the norm of the constant line along BG -> pt is the group order", [] {
    for (int n : {2, 3, 4}) {
      Gptr bg = delooping(cyclic_group(n));
      GroupoidMap f = constant_map(bg, point_groupoid());
      LocalSystem line = constant_system(bg, 1);
      ShriekToStar sts = shriek_to_star(f, line);
      LinearMapOfSystems direct = norm_direct(f, line, sts.push_left, sts.push_right);
      if (direct.comps[0](0, 0) != Rational(n)) return false;
      if (sts.map.comps != direct.comps) return false;
    }
    return true;
  });
  add("the norm over a two-point discrete base is the biproduct identification", [] {
    Gptr d2 = discrete_groupoid(2);
    GroupoidMap f = constant_map(d2, point_groupoid());
    LocalSystem sys = constant_system(d2, 1);
    ShriekToStar sts = shriek_to_star(f, sys);
    return sts.map.comps[0].is_identity();
  });
  add("the sign system of C_2 has zero-dimensional (co)invariants and zero norm", [] {
    FiniteGroup c2 = cyclic_group(2);
    Gptr bc2 = delooping(c2);
    LocalSystem sign(bc2, {1}, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
    GroupoidMap f = constant_map(bc2, point_groupoid());
    ShriekToStar sts = shriek_to_star(f, sign);
    return sts.push_left.system.dims[0] == 0 && sts.push_right.system.dims[0] == 0 &&
           sts.map.invertible();
  });
  add("the direct norm of the regular system of C_3 is an isomorphism of lines", [] {
    FiniteGroup c3 = cyclic_group(3);
    Gptr bc3 = delooping(c3);
    LocalSystem reg = system_from_representation(bc3, regular_images(c3));
    GroupoidMap f = constant_map(bc3, point_groupoid());
    ShriekToStar sts = shriek_to_star(f, reg);
    LinearMapOfSystems direct = norm_direct(f, reg, sts.push_left, sts.push_right);
    return direct.comps[0].rows() == 1 && direct.comps[0](0, 0) == Rational(1) &&
           sts.map.comps == direct.comps;
  });
  add("dualizing comparisons are invertible for C_2 regular and S_3 permutation systems",
      [] {
        FiniteGroup c2 = cyclic_group(2), s3 = symmetric_group(3);
        Gptr bc2 = delooping(c2), bs3 = delooping(s3);
        GroupoidMap f2 = constant_map(bc2, point_groupoid());
        GroupoidMap f3 = constant_map(bs3, point_groupoid());
        LocalSystem reg = system_from_representation(bc2, regular_images(c2));
        int t = element_of_order(s3, 2);
        LocalSystem perm = system_from_representation(
            bs3, coset_rep(s3, subgroup_closure(s3, {t})).images);
        return dualizing_comparison(f2, reg).comparison.invertible() &&
               dualizing_comparison(f3, perm).comparison.invertible();
      });
  add("linear-algebra cardinality matches the combinatorial one", [] {
    std::vector<Gptr> xs = {point_groupoid(), discrete_groupoid(3),
                            delooping(cyclic_group(4)), delooping(symmetric_group(3)),
                            conjugation_groupoid(symmetric_group(3)),
                            disjoint_union({delooping(cyclic_group(2)), discrete_groupoid(2)})};
    for (const auto& x : xs)
      if (cardinality_linear(x) != cardinality(x)) return false;
    return true;
  });

  // -- character layer -----------------------------------------------------
  add("the character of a trivial representation is constant 1", [] {
    for (const FiniteGroup& g : {cyclic_group(4), symmetric_group(3)}) {
      ClassFunction chi = character(trivial_rep(g));
      for (const auto& v : chi.values)
        if (v != Rational(1)) return false;
    }
    return true;
  });
  add("the regular character is the group order at the identity and 0 elsewhere", [] {
    FiniteGroup s3 = symmetric_group(3);
    ClassFunction chi = character(regular_rep(s3));
    LoopGroupoid lg = free_loop(delooping(s3));
    Skeleton sk = skeletize(lg.grpd);
    for (int c = 0; c < sk.num_components(); ++c) {
      int loop = lg.object_label[sk.components[c].rep].second;
      if (chi.values[c] != (loop == s3.identity ? Rational(6) : Rational(0))) return false;
    }
    return true;
  });
  add("the natural permutation character of S_3 is (3, 1, 0)", [] {
    FiniteGroup s3 = symmetric_group(3);
    RationalRep perm = coset_rep(s3, subgroup_closure(s3, {element_of_order(s3, 2)}));
    return character(perm).values == std::vector<Rational>{3, 1, 0};
  });
  add("inducing the trivial representation gives the coset permutation representation",
      [] {
        FiniteGroup s3 = symmetric_group(3);
        for (int e = 1; e < s3.order; ++e) {
          std::vector<int> elems = subgroup_closure(s3, {e});
          FiniteGroup h;
          GroupoidMap inc = subgroup_inclusion(s3, elems, &h);
          if (character(induce(inc, trivial_rep(h))).values !=
              character(coset_rep(s3, elems)).values)
            return false;
        }
        return true;
      });
  add("inducing the regular representation gives the regular representation", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc = subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 3)}), &h);
    return character(induce(inc, regular_rep(h))).values ==
           character(regular_rep(s3)).values;
  });
  add("inducing the sign of C_2 up to S_3 has character (3, -1, 0)", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 2)}), &h);
    RationalRep sign(h, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
    return character(induce(inc, sign)).values == std::vector<Rational>{3, -1, 0};
  });
  add("inducing the sign class function by integration also gives (3, -1, 0)", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 2)}), &h);
    ClassFunction chi{free_loop(delooping(h)).grpd, {Rational(1), Rational(-1)}};
    return induced_character_via_integration(inc, chi).values ==
           std::vector<Rational>{3, -1, 0};
  });
  add("induction squares commute for all cyclic subgroups of S_3", [] {
    FiniteGroup s3 = symmetric_group(3);
    for (int e = 1; e < s3.order; ++e) {
      FiniteGroup h;
      GroupoidMap inc = subgroup_inclusion(s3, subgroup_closure(s3, {e}), &h);
      if (!verify_induction_square(inc, trivial_rep(h)).ok) return false;
      if (!verify_induction_square(inc, regular_rep(h)).ok) return false;
    }
    return true;
  });
  add("the regular induction square for A_3 in S_3 reports values (6, 0, 0)", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 3)}), &h);
    SquareReport rep = verify_induction_square(inc, regular_rep(h));
    return rep.ok && rep.via_representations == std::vector<Rational>{6, 0, 0};
  });
  add("the 2-typical square for the sign of C_2 in S_3 commutes on 2 classes", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 2)}), &h);
    RationalRep sign(h, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
    SquareReport rep = p_typical_character_square(inc, sign, 2);
    return rep.ok && rep.via_representations.size() == 2;
  });
  add("the 3-typical square for the regular representation of A_3 commutes", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 3)}), &h);
    return p_typical_character_square(inc, regular_rep(h), 3).ok;
  });
  add("p coprime to the group order degenerates the square to the identity class", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 2)}), &h);
    SquareReport rep = p_typical_character_square(inc, regular_rep(h), 5);
    return rep.ok && rep.via_representations.size() == 1;
  });
  add("the chromatic cardinality of a point is 1 at every height", [] {
    for (long p : {2L, 3L})
      for (int n = 0; n <= 3; ++n)
        if (chromatic_cardinality(point_groupoid(), p, n) != Rational(1)) return false;
    return true;
  });
  add("the chromatic cardinality of BC_p at height n is p^(n-1)", [] {
    for (long p : {2L, 3L, 5L}) {
      Gptr bcp = delooping(cyclic_group(static_cast<int>(p)));
      Rational expect = 1;
      for (int n = 1; n <= 3; ++n) {
        if (chromatic_cardinality(bcp, p, n) != expect) return false;
        expect *= Rational(p);
      }
    }
    return true;
  });
  add("the chromatic cardinality of BS_3 at p = 2 is 2/3 at height 1 and 5/3 at height 2",
      [] {
        Gptr bs3 = delooping(symmetric_group(3));
        return chromatic_cardinality(bs3, 2, 1) == Rational(2, 3) &&
               chromatic_cardinality(bs3, 2, 2) == Rational(5, 3);
      });
  add("commuting-tuple oracles: C_p squared gives p, S_3 gives 5/3, trivial gives 1", [] {
    return chromatic_cardinality_oracle(cyclic_group(3), 3, 2) == Rational(3) &&
           chromatic_cardinality_oracle(symmetric_group(3), 2, 2) == Rational(5, 3) &&
           chromatic_cardinality_oracle(trivial_group(), 2, 3) == Rational(1);
  });

  // -- command-line examples ------------------------------------------------
  add("chromatic cardinality of the S_3 delooping at p = 2, height 1 prints 2/3", [] {
    return to_string(chromatic_cardinality(delooping(symmetric_group(3)), 2, 1)) == "2/3";
  });
  add("cardinality of the C_6 delooping prints 1/6", [] {
    return to_string(cardinality(delooping(cyclic_group(6)))) == "1/6";
  });
  add("the induce-check example reports PASS with values 3, -1, 0", [] {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup h;
    GroupoidMap inc =
        subgroup_inclusion(s3, subgroup_closure(s3, {element_of_order(s3, 2)}), &h);
    RationalRep sign(h, {QMat::identity(1), QMat::identity(1) * Rational(-1)});
    SquareReport rep = verify_induction_square(inc, sign);
    return rep.ok && rep.via_representations == std::vector<Rational>{3, -1, 0} &&
           rep.via_integration == std::vector<Rational>{3, -1, 0};
  });

  return checks;
}

int run_suite() {
  std::vector<Check> checks = build_suite();
  int passed = 0;
  for (const auto& c : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string("  (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS  " : "FAIL  ") << c.name << note << '\n';
    if (ok) ++passed;
  }
  std::cout << "passed " << passed << " of " << checks.size() << " checks\n";
  if (passed != static_cast<int>(checks.size()))
    throw theorem_violation("example suite failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on finite groupoids"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "plain";
  long p = 0;
  int n = 1;

  auto add_io = [&](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("input", input, "input JSON file ('-' or omitted for stdin)");
    cmd->add_option("--output", format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));
  };

  CLI::App* c_card = app.add_subcommand("cardinality", "homotopy cardinality of a groupoid");
  add_io(c_card);
  CLI::App* c_loop = app.add_subcommand("loop", "(p-typical) free loop groupoid summary");
  add_io(c_loop);
  c_loop->add_option("--p", p, "prime for p-typical loops (omit for plain free loops)");
  c_loop->add_option("--n", n, "number of loop iterations");
  CLI::App* c_span = app.add_subcommand("span", "linearize a span to an exact matrix");
  add_io(c_span);
  CLI::App* c_norm = app.add_subcommand("norm-check", "verify the norm of a map and system");
  add_io(c_norm);
  CLI::App* c_bc = app.add_subcommand("bc-check", "verify base change around a square");
  add_io(c_bc);
  CLI::App* c_ind =
      app.add_subcommand("induce-check", "verify the induced-character square");
  add_io(c_ind);
  c_ind->add_option("--p", p, "restrict to p-power-order classes");
  CLI::App* c_chrom = app.add_subcommand("chrom-card", "chromatic cardinality at (p, n)");
  add_io(c_chrom);
  c_chrom->add_option("--p", p, "prime")->required();
  c_chrom->add_option("--n,--height", n, "height")->required();
  CLI::App* c_suite = app.add_subcommand("suite", "run the full example and property suite");
  add_io(c_suite, /*takes_input=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  bool json_out = format == "json";
  try {
    if (app.got_subcommand(c_card)) return run_cardinality(input, json_out);
    if (app.got_subcommand(c_loop)) return run_loop(input, p, n, json_out);
    if (app.got_subcommand(c_span)) return run_span(input, json_out);
    if (app.got_subcommand(c_norm)) return run_norm_check(input, json_out);
    if (app.got_subcommand(c_bc)) return run_bc_check(input, json_out);
    if (app.got_subcommand(c_ind)) return run_induce_check(input, p, json_out);
    if (app.got_subcommand(c_chrom)) return run_chrom_card(input, p, n, json_out);
    if (app.got_subcommand(c_suite)) return run_suite();
  } catch (const grpd::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const grpd::capacity_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const grpd::theorem_violation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
