#pragma once

// JSON encodings.
//
//   element   Z: 3   Zi, Zzeta6: [a, b]   Q: "p/q"   Qi: ["p/q", "r/s"]
//             Zzeta<d>: [c_0, ..., c_{phi(d)-1}]
//             integers that do not fit in 64 bits are written as strings
//   cycle     {"ring": tag, "entries": [...]}
//   frieze    {"cycle": cycle, "rows": [[c_{i,i}, ..., c_{i,i+m}], ...]}
//   window    {"ring": tag, "rows": [{"start": col, "entries": [...]}, ...]}
//   labelling {"m": m, "diagonals": [[i, j], ...], "labels": {"i,j,k": n}}

#include <climits>
#include <string>
#include <vector>

#include "json.hpp"

#include "quiddity/clusters.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/frieze.hpp"
#include "quiddity/labelling.hpp"
#include "quiddity/reduction.hpp"

namespace quiddity {

using json = nlohmann::ordered_json;

namespace detail {

inline json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<long long>(z.get_si()));
  return json(z.get_str());
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw error(errc::usage, "not an integer: " + j.dump());
    return z;
  }
  throw error(errc::usage, "expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
      throw error(errc::usage, "not a rational: " + j.dump());
    q.canonicalize();
    return q;
  }
  throw error(errc::usage, "expected a rational, got " + j.dump());
}

inline json coordinate_to_json(const Rational& q, bool field) {
  if (field) return json(q.get_str());
  return integer_to_json(q.get_num());
}

template <class T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::usage, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw error(errc::usage, std::string("bad field \"") + key + "\": " + e.what());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::usage, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline json to_json(const RingElement& x) {
  const bool field = x.ring().is_field();
  if (x.coords().size() == 1) return detail::coordinate_to_json(x.coords()[0], field);
  json out = json::array();
  for (const auto& q : x.coords()) out.push_back(detail::coordinate_to_json(q, field));
  return out;
}

inline RingElement element_from_json(const json& j, RingDescriptor ring) {
  std::vector<Rational> coords;
  if (j.is_array()) {
    for (const auto& c : j) coords.push_back(detail::rational_from_json(c));
  } else {
    coords.push_back(detail::rational_from_json(j));
  }
  if (ring.degree() > 1 && coords.size() == 1) coords.resize(ring.degree(), Rational(0));
  return RingElement(ring, std::move(coords));
}

inline json to_json(const Cycle& c) {
  json entries = json::array();
  for (const auto& e : c.entries()) entries.push_back(to_json(e));
  return json{{"ring", c.ring().tag()}, {"entries", entries}};
}

inline RingDescriptor ring_from_json(const json& j) { return RingDescriptor::from_tag(detail::require<std::string>(j, "ring")); }

inline Cycle cycle_from_json(const json& j) {
  const RingDescriptor ring = ring_from_json(j);
  const json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw error(errc::usage, "\"entries\" must be an array");
  std::vector<RingElement> e;
  for (const auto& x : entries) e.push_back(element_from_json(x, ring));
  return Cycle(ring, std::move(e));
}

inline json to_json(const FriezePattern& f) {
  json rows = json::array();
  for (const auto& row : f.rows()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return json{{"cycle", to_json(f.cycle())}, {"rows", rows}};
}

// Rows are taken as given; compare with frieze_from_cycle to validate.
inline FriezePattern frieze_from_json(const json& j) {
  const Cycle c = cycle_from_json(detail::field(j, "cycle"));
  std::vector<std::vector<RingElement>> rows;
  for (const auto& r : detail::field(j, "rows")) {
    if (!r.is_array() || r.size() != c.size() + 1) throw error(errc::usage, "each frieze row needs m + 1 entries");
    std::vector<RingElement> row;
    for (const auto& x : r) row.push_back(element_from_json(x, c.ring()));
    rows.push_back(std::move(row));
  }
  if (rows.size() != c.size()) throw error(errc::usage, "a frieze needs m rows");
  return FriezePattern(c, std::move(rows));
}

inline json to_json(const FriezeWindow& w) {
  json rows = json::array();
  for (const auto& row : w.rows) {
    json e = json::array();
    for (const auto& x : row.entries) e.push_back(to_json(x));
    rows.push_back(json{{"start", row.start}, {"entries", e}});
  }
  return json{{"ring", w.ring.tag()}, {"rows", rows}};
}

inline FriezeWindow window_from_json(const json& j) {
  FriezeWindow w;
  w.ring = ring_from_json(j);
  for (const auto& r : detail::field(j, "rows")) {
    FriezeWindow::Row row;
    row.start = detail::require<long>(r, "start");
    for (const auto& x : detail::field(r, "entries")) row.entries.push_back(element_from_json(x, w.ring));
    w.rows.push_back(std::move(row));
  }
  return w;
}

inline std::string triangle_key(const Triangle& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

inline json to_json(const Labelling& lab) {
  json diagonals = json::array();
  for (auto [i, j] : lab.triangulation().diagonals()) diagonals.push_back(json::array({i, j}));
  json labels = json::object();
  for (const auto& [t, v] : lab.pieces()) labels[triangle_key(t)] = detail::integer_to_json(v);
  return json{{"m", lab.m()}, {"diagonals", diagonals}, {"labels", labels}};
}

inline Labelling labelling_from_json(const json& j) {
  const long m = detail::require<long>(j, "m");
  std::vector<Diagonal> diagonals;
  for (const auto& d : detail::field(j, "diagonals")) {
    if (!d.is_array() || d.size() != 2) throw error(errc::usage, "a diagonal is a pair [i, j]");
    diagonals.emplace_back(d[0].get<long>(), d[1].get<long>());
  }
  Triangulation tri(m, diagonals);
  const json& labels = detail::field(j, "labels");
  if (!labels.is_object()) throw error(errc::usage, "\"labels\" must be an object");
  std::vector<Integer> values;
  for (const auto& t : tri.triangles()) {
    const std::string key = triangle_key(t);
    if (!labels.contains(key)) throw error(errc::invalid_labelling, "no label for triangle " + key);
    values.push_back(detail::integer_from_json(labels.at(key)));
  }
  if (labels.size() != values.size()) throw error(errc::invalid_labelling, "labels for triangles not in the triangulation");
  return Labelling(tri, std::move(values));
}

inline json to_json(const Cluster& c) {
  json diagonals = json::array();
  for (std::size_t k = 0; k < c.labels.size(); ++k) {
    auto [i, j] = c.triangulation.diagonals()[k];
    diagonals.push_back(json{{"diagonal", json::array({i, j})}, {"label", to_json(c.labels[k])}});
  }
  return json{{"m", c.triangulation.m()}, {"diagonals", diagonals}};
}

inline Cluster cluster_from_json(const json& j, RingDescriptor ring) {
  const long m = detail::require<long>(j, "m");
  std::vector<Diagonal> diagonals;
  std::vector<std::pair<Diagonal, RingElement>> given;
  for (const auto& d : detail::field(j, "diagonals")) {
    const json& p = detail::field(d, "diagonal");
    Diagonal dg{p.at(0).get<long>(), p.at(1).get<long>()};
    diagonals.push_back(dg);
    given.emplace_back(dg, element_from_json(detail::field(d, "label"), ring));
  }
  Cluster c{Triangulation(m, diagonals), {}};
  for (const auto& dg : c.triangulation.diagonals())
    for (const auto& [g, v] : given)
      if (g == dg) c.labels.push_back(v);
  return c;
}

inline json to_json(const Move& mv) {
  static const char* names[] = {"remove_one", "remove_minus_one", "remove_zero", "negate"};
  json out{{"move", names[mv.kind]}};
  if (mv.kind != Move::negate) out["k"] = mv.k;
  return out;
}

inline Move move_from_json(const json& j) {
  static const std::vector<std::string> names = {"remove_one", "remove_minus_one", "remove_zero", "negate"};
  const std::string name = detail::require<std::string>(j, "move");
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw error(errc::usage, "unknown move " + name);
  Move mv{static_cast<Move::Kind>(it - names.begin())};
  if (mv.kind != Move::negate) mv.k = detail::require<long>(j, "k");
  return mv;
}

inline json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json moves = json::array();
    for (const auto& mv : s.moves) moves.push_back(to_json(mv));
    steps.push_back(json{{"case", to_string(s.tag)},
                         {"indices", s.indices},
                         {"before", to_json(s.before)},
                         {"after", to_json(s.after)},
                         {"moves", moves},
                         {"eps_before", s.eps_before},
                         {"eps_after", s.eps_after}});
  }
  return json{{"start", to_json(t.start)}, {"steps", steps}};
}

inline ReductionTrace trace_from_json(const json& j) {
  ReductionTrace t{cycle_from_json(detail::field(j, "start")), {}};
  for (const auto& s : detail::field(j, "steps")) {
    ReductionStep step;
    const std::string tag = detail::require<std::string>(s, "case");
    bool known = false;
    for (int c = 0; c <= static_cast<int>(ReductionCase::I3); ++c)
      if (to_string(static_cast<ReductionCase>(c)) == tag) {
        step.tag = static_cast<ReductionCase>(c);
        known = true;
      }
    if (!known) throw error(errc::usage, "unknown reduction case " + tag);
    step.indices = detail::require<std::vector<long>>(s, "indices");
    step.before = cycle_from_json(detail::field(s, "before"));
    step.after = cycle_from_json(detail::field(s, "after"));
    for (const auto& mv : detail::field(s, "moves")) step.moves.push_back(move_from_json(mv));
    step.eps_before = detail::require<int>(s, "eps_before");
    step.eps_after = detail::require<int>(s, "eps_after");
    t.steps.push_back(std::move(step));
  }
  return t;
}

inline json to_json(const EnumerationResult& r) {
  json reps = json::array();
  for (const auto& c : r.representatives) {
    json e = json::array();
    for (const auto& x : c.entries()) e.push_back(to_json(x));
    reps.push_back(e);
  }
  return json{{"ring", r.ring.tag()},
              {"height", r.height},
              {"total", r.total},
              {"orbit_count", r.orbit_count},
              {"representatives", reps}};
}

inline EnumerationResult enumeration_from_json(const json& j) {
  EnumerationResult r;
  r.ring = ring_from_json(j);
  r.height = detail::require<long>(j, "height");
  r.total = detail::require<std::size_t>(j, "total");
  r.orbit_count = detail::require<std::size_t>(j, "orbit_count");
  for (const auto& rep : detail::field(j, "representatives")) {
    std::vector<RingElement> e;
    for (const auto& x : rep) e.push_back(element_from_json(x, r.ring));
    r.representatives.emplace_back(r.ring, std::move(e));
  }
  return r;
}

}  // namespace quiddity
