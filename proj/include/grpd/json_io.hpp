#pragma once

#include "grpd/local_system.hpp"
#include "grpd/rep.hpp"
#include "grpd/span.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace grpd {

using json = nlohmann::json;
/// Output documents preserve insertion order so serialization is stable.
using ojson = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Desk-scale guard shared by every JSON entry point: inputs describing
/// larger groupoids are rejected with a capacity error rather than ground
/// through.
constexpr int kMaxMorphisms = 5000;

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw parse_error("malformed JSON input");
  return j;
}

/// Top-level documents must declare the schema version they were written
/// against.
inline void check_schema(const json& j) {
  if (!j.is_object()) throw parse_error("input must be a JSON object");
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != kSchemaVersion)
    throw parse_error("input must carry \"schema\": 1");
}

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw parse_error(std::string("missing field \"") + name + "\"");
  return j[name];
}

inline int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw parse_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

/// Group from {"order": n, "mul": [[...]]} or {"perm_gens": [[...], ...]}.
/// The identity and inverses of a table-given group are derived, then the
/// full axioms are checked.
inline FiniteGroup group_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("group must be a JSON object");
  if (j.contains("perm_gens")) {
    const json& gens = j["perm_gens"];
    if (!gens.is_array()) throw parse_error("perm_gens must be an array of permutations");
    std::vector<std::vector<int>> perms;
    for (const auto& g : gens) perms.push_back(int_list(g, "permutation"));
    return group_from_permutations(perms);
  }
  int order = int_field(j, "order");
  if (order <= 0) throw parse_error("group order must be positive");
  if (order > kMaxMorphisms) throw capacity_error("group exceeds the supported size");
  const json& mul = field(j, "mul");
  if (!mul.is_array() || static_cast<int>(mul.size()) != order)
    throw parse_error("mul must be an order x order table");
  FiniteGroup g;
  g.order = order;
  for (const auto& row : mul) {
    g.mul.push_back(int_list(row, "mul row"));
    if (static_cast<int>(g.mul.back().size()) != order)
      throw parse_error("mul must be an order x order table");
    for (int v : g.mul.back())
      if (v < 0 || v >= order) throw parse_error("mul entry out of range");
  }
  g.identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw parse_error("group table has no two-sided identity");
  g.inv.assign(order, -1);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (g.mul[x][y] == g.identity && g.mul[y][x] == g.identity) g.inv[x] = y;
  for (int x = 0; x < order; ++x)
    if (g.inv[x] < 0) throw parse_error("group table element without inverse");
  g.validate();
  return g;
}

/// Groupoid from one of:
///   {"group": <group>}                      delooping
///   {"discrete": n}                         n objects, identities only
///   {"action": {"group": g, "points": n, "table": [[a.s]]}}
///   {"disjoint_union": [<groupoid>, ...]}
///   {"product": [<groupoid>, <groupoid>, ...]}
inline Gptr groupoid_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("groupoid must be a JSON object");
  Gptr out;
  if (j.contains("group")) {
    out = delooping(group_from_json(j["group"]));
  } else if (j.contains("discrete")) {
    const json& n = j["discrete"];
    if (!n.is_number_integer() || n.get<int>() < 0)
      throw parse_error("discrete groupoid needs a nonnegative integer");
    if (n.get<int>() > kMaxMorphisms) throw capacity_error("groupoid exceeds the supported size");
    out = discrete_groupoid(n.get<int>());
  } else if (j.contains("action")) {
    const json& a = j["action"];
    FiniteGroup g = group_from_json(field(a, "group"));
    int points = int_field(a, "points");
    if (points < 0) throw parse_error("action points must be nonnegative");
    if (static_cast<long long>(g.order) * points > kMaxMorphisms)
      throw capacity_error("groupoid exceeds the supported size");
    const json& table = field(a, "table");
    if (!table.is_array() || static_cast<int>(table.size()) != g.order)
      throw parse_error("action table must have one row per group element");
    std::vector<std::vector<int>> act;
    for (const auto& row : table) {
      act.push_back(int_list(row, "action row"));
      if (static_cast<int>(act.back().size()) != points)
        throw parse_error("action row must have one entry per point");
      for (int v : act.back())
        if (v < 0 || v >= points) throw parse_error("action entry out of range");
    }
    out = action_groupoid(g, points, [act](int e, int s) { return act[e][s]; });
  } else if (j.contains("disjoint_union")) {
    const json& parts = j["disjoint_union"];
    if (!parts.is_array()) throw parse_error("disjoint_union must be an array of groupoids");
    std::vector<Gptr> sub;
    for (const auto& p : parts) sub.push_back(groupoid_from_json(p));
    out = disjoint_union(sub);
  } else if (j.contains("product")) {
    const json& parts = j["product"];
    if (!parts.is_array() || parts.size() < 2)
      throw parse_error("product needs at least two groupoids");
    Gptr acc = groupoid_from_json(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) acc = product(acc, groupoid_from_json(parts[i]));
    out = acc;
  } else {
    throw parse_error(
        "groupoid must have one of: group, discrete, action, disjoint_union, product");
  }
  if (out->num_morphisms() > kMaxMorphisms)
    throw capacity_error("groupoid exceeds the supported size");
  return out;
}

/// Map tables {"objects": [...], "morphisms": [...]} between two given
/// groupoids; functoriality is checked by the constructor.
inline GroupoidMap map_tables_from_json(const json& j, const Gptr& src, const Gptr& tgt) {
  if (!j.is_object()) throw parse_error("map must be a JSON object");
  return GroupoidMap(src, tgt, int_list(field(j, "objects"), "map objects"),
                     int_list(field(j, "morphisms"), "map morphisms"));
}

/// Self-contained map {"source": <groupoid>, "target": <groupoid>,
/// "objects": [...], "morphisms": [...]}.
inline GroupoidMap map_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("map must be a JSON object");
  return map_tables_from_json(j, groupoid_from_json(field(j, "source")),
                              groupoid_from_json(field(j, "target")));
}

/// Span {"left_foot": g, "right_foot": g, "apex": g, "left_leg": tables,
/// "right_leg": tables}; the legs run from the apex to the feet.
inline Span span_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("span must be a JSON object");
  Gptr left = groupoid_from_json(field(j, "left_foot"));
  Gptr right = groupoid_from_json(field(j, "right_foot"));
  Gptr apex = groupoid_from_json(field(j, "apex"));
  return Span{left, right, apex, map_tables_from_json(field(j, "left_leg"), apex, left),
              map_tables_from_json(field(j, "right_leg"), apex, right)};
}

/// Rational entries are strings "a/b" or "a"; bare JSON integers are also
/// accepted on input.
inline Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  throw parse_error("rational entries must be strings like \"a/b\"");
}

inline QMat matrix_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw parse_error("matrix rows must have equal length");
    for (int k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[k]);
  }
  return m;
}

inline ojson matrix_to_json(const QMat& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Local system {"dims": [...], "mats": [<matrix>, ...]} on a given base.
inline LocalSystem system_from_json(const json& j, const Gptr& base) {
  if (!j.is_object()) throw parse_error("local system must be a JSON object");
  std::vector<int> dims = int_list(field(j, "dims"), "system dims");
  const json& mats = field(j, "mats");
  if (!mats.is_array()) throw parse_error("system mats must be an array of matrices");
  std::vector<QMat> ms;
  ms.reserve(mats.size());
  for (const auto& m : mats) ms.push_back(matrix_from_json(m));
  return LocalSystem(base, std::move(dims), std::move(ms));
}

/// Representation of a group: {"name": "trivial"|"regular"} or
/// {"images": [<matrix per element>]}.
inline RationalRep rep_from_json(const json& j, const FiniteGroup& g) {
  if (!j.is_object()) throw parse_error("rep must be a JSON object");
  if (j.contains("name")) {
    std::string name = j["name"].get<std::string>();
    if (name == "trivial") return trivial_rep(g);
    if (name == "regular") return regular_rep(g);
    throw parse_error("unknown rep name: " + name);
  }
  const json& images = field(j, "images");
  if (!images.is_array()) throw parse_error("rep images must be an array of matrices");
  std::vector<QMat> ms;
  ms.reserve(images.size());
  for (const auto& m : images) ms.push_back(matrix_from_json(m));
  return RationalRep(g, std::move(ms));
}

}  // namespace grpd
