#include "qbsa/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qbsa/error.hpp"

namespace qbsa {

bool CycleClass::contains(const Path& cycle) const {
  return std::find(rotations.begin(), rotations.end(), cycle) != rotations.end();
}

Path rotate(const Quiver& q, const Path& cycle, std::size_t j) {
  if (cycle.is_trivial() || cycle.source() != cycle.target())
    fail(ErrorCode::InvariantViolation, "rotation of a path that is not a cycle");
  j %= cycle.length();
  if (j == 0) return cycle;
  return cycle.slice(q, j, cycle.length() - j).then(cycle.slice(q, 0, j));
}

CycleClass cycle_class_of(const Quiver& q, const Path& cycle) {
  CycleClass c{cycle, {}};
  for (std::size_t j = 0; j < cycle.length(); ++j) {
    Path r = rotate(q, cycle, j);
    if (std::find(c.rotations.begin(), c.rotations.end(), r) == c.rotations.end()) c.rotations.push_back(r);
  }
  c.representative = *std::min_element(c.rotations.begin(), c.rotations.end());
  return c;
}

std::vector<CycleClass> simple_cycle_classes(const Quiver& q) {
  std::vector<CycleClass> out;
  // Each elementary cycle is found once, anchored at its least point.
  for (std::size_t s = 0; s < q.num_points(); ++s) {
    const PointId start = point_at(s);
    std::vector<ArrowId> stack;
    std::vector<std::size_t> choice{0};
    std::vector<PointId> at{start};
    std::vector<bool> on_path(q.num_points(), false);
    on_path[s] = true;
    while (!choice.empty()) {
      const auto outs = q.out_arrows(at.back());
      if (choice.back() >= outs.size()) {
        choice.pop_back();
        if (at.size() > 1) on_path[index(at.back())] = false;
        at.pop_back();
        if (!stack.empty()) stack.pop_back();
        continue;
      }
      const ArrowId a = outs[choice.back()++];
      const PointId t = q.target(a);
      if (t == start) {
        std::vector<ArrowId> cyc = stack;
        cyc.push_back(a);
        out.push_back(cycle_class_of(q, Path::of(q, std::move(cyc))));
        continue;
      }
      if (index(t) < s || on_path[index(t)]) continue;
      stack.push_back(a);
      at.push_back(t);
      on_path[index(t)] = true;
      choice.push_back(0);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CycleClass& a, const CycleClass& b) { return a.representative < b.representative; });
  return out;
}

std::optional<Path> leading_cycle(const Quiver& q, const Path& p) {
  const auto pts = p.points(q);
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[0]) return p.slice(q, 0, i);
  return std::nullopt;
}

std::optional<Path> trailing_cycle(const Quiver& q, const Path& p) {
  const auto pts = p.points(q);
  const std::size_t n = p.length();
  for (std::size_t i = n; i-- > 0;)
    if (pts[i] == pts[n]) return p.slice(q, i, n - i);
  return std::nullopt;
}

Path delete_cycles(const Quiver& q, const Path& p) {
  Path cur = p;
  for (;;) {
    const auto pts = cur.points(q);
    std::map<PointId, std::size_t> seen;
    bool cut = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      auto [it, fresh] = seen.emplace(pts[j], j);
      if (fresh) continue;
      const std::size_t i = it->second;
      Path head = cur.slice(q, 0, i);
      Path tail = cur.slice(q, j, cur.length() - j);
      cur = head.then(tail);
      cut = true;
      break;
    }
    if (!cut) return cur;
  }
}

std::string_view to_string(RelationType t) noexcept {
  switch (t) {
    case RelationType::Type1: return "Type1";
    case RelationType::Type2: return "Type2";
    case RelationType::Type3: return "Type3";
    case RelationType::Type4: return "Type4";
    case RelationType::Type5: return "Type5";
    case RelationType::R2: return "R2";
    case RelationType::Type2Degenerate: return "Type2Degenerate";
  }
  return "?";
}

RelationType RelationClass::type() const noexcept {
  return std::visit(
      [](const auto& s) -> RelationType {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, shape::Type1>) return RelationType::Type1;
        else if constexpr (std::is_same_v<S, shape::Type2>) return RelationType::Type2;
        else if constexpr (std::is_same_v<S, shape::Type3>) return RelationType::Type3;
        else if constexpr (std::is_same_v<S, shape::Type4>) return RelationType::Type4;
        else if constexpr (std::is_same_v<S, shape::Type5>) return RelationType::Type5;
        else if constexpr (std::is_same_v<S, shape::R2>) return RelationType::R2;
        else return RelationType::Type2Degenerate;
      },
      shape);
}

std::pair<Path, Path> RelationClass::recompose() const {
  std::pair<Path, Path> uv = std::visit(
      [](const auto& s) -> std::pair<Path, Path> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, shape::Type1>) {
          return {s.a.then(s.p), s.p.then(s.b)};
        } else if constexpr (std::is_same_v<S, shape::Type2>) {
          return {s.a.power(s.n).then(s.a1), s.b2.then(s.b.power(s.m))};
        } else if constexpr (std::is_same_v<S, shape::Type3>) {
          return {s.a.power(s.n), s.b.power(s.m)};
        } else if constexpr (std::is_same_v<S, shape::Type4>) {
          return {s.a.then(s.b).power(s.m), s.b.then(s.a).power(s.m)};
        } else if constexpr (std::is_same_v<S, shape::Type5>) {
          return {s.a.then(s.b).power(s.m).then(s.a), s.b.then(s.a).power(s.m).then(s.b)};
        } else if constexpr (std::is_same_v<S, shape::R2>) {
          return {s.u, s.v};
        } else {
          Path u = s.cycle_first ? s.a.power(s.n).then(s.part) : s.part.then(s.a.power(s.n));
          return {u, s.other};
        }
      },
      shape);
  if (swapped) std::swap(uv.first, uv.second);
  return uv;
}

namespace {

FirstMeet first_meet(const Quiver& q, const Path& u, const Path& v) {
  const auto up = u.points(q);
  const auto vp = v.points(q);
  const PointId x = u.source();
  for (std::size_t i = 1; i < up.size(); ++i) {
    if (up[i] == x) continue;
    auto it = std::find(vp.begin() + 1, vp.end(), up[i]);
    if (it == vp.end()) continue;
    const auto j = static_cast<std::size_t>(it - vp.begin());
    FirstMeet m;
    m.z = up[i];
    m.u_prime = u.slice(q, 0, i);
    m.v_prime = v.slice(q, 0, j);
    m.u1 = delete_cycles(q, m.u_prime);
    m.v1 = delete_cycles(q, m.v_prime);
    return m;
  }
  // u and v share their target, so this is unreachable for parallel paths.
  fail(ErrorCode::InvariantViolation, "binomial sides meet nowhere");
}

bool shares_arrow(const Path& u, const Path& v) {
  for (ArrowId a : u.arrows())
    if (std::find(v.arrows().begin(), v.arrows().end(), a) != v.arrows().end()) return true;
  return false;
}

// U = a^n rest, rest a proper nontrivial prefix of a.
std::optional<std::pair<std::size_t, Path>> split_start(const Quiver& q, const Path& u, const Path& a) {
  std::size_t n = 0;
  while ((n + 1) * a.length() <= u.length() && u.slice(q, n * a.length(), a.length()) == a) ++n;
  if (n == 0) return std::nullopt;
  const std::size_t used = n * a.length();
  if (used == u.length()) return std::nullopt;
  Path rest = u.slice(q, used, u.length() - used);
  if (rest.length() >= a.length() || !a.starts_with(rest.arrows())) return std::nullopt;
  return std::pair{n, rest};
}

// V = rest b^m, rest a proper nontrivial suffix of b.
std::optional<std::pair<std::size_t, Path>> split_end(const Quiver& q, const Path& v, const Path& b) {
  std::size_t m = 0;
  while ((m + 1) * b.length() <= v.length() &&
         v.slice(q, v.length() - (m + 1) * b.length(), b.length()) == b)
    ++m;
  if (m == 0) return std::nullopt;
  const std::size_t used = m * b.length();
  if (used == v.length()) return std::nullopt;
  Path rest = v.slice(q, 0, v.length() - used);
  if (rest.length() >= b.length() || !b.ends_with(rest.arrows())) return std::nullopt;
  return std::pair{m, rest};
}

bool cycle_free_ends(const Quiver& q, const Path& p) {
  return !leading_cycle(q, p) && !trailing_cycle(q, p);
}

std::optional<RelationClass> classify_closed(const IdealView& iv, std::size_t idx, const Path& u, const Path& v) {
  const Quiver& q = iv.quiver();
  const Path a = *leading_cycle(q, u);
  const Path b = *leading_cycle(q, v);
  const PointId x = u.source();

  if (u.length() % a.length() == 0 && v.length() % b.length() == 0) {
    const std::size_t n = u.length() / a.length();
    const std::size_t m = v.length() / b.length();
    // The last arrow of a followed by the first of b need not lie in I
    // when n = 1; see type3_one_one.qbsa.
    if (u == a.power(n) && v == b.power(m)) {
      return RelationClass{idx, false, shape::Type3{x, a, b, n, m}};
    }
  }
  const Path ab = a.then(b);
  const Path ba = b.then(a);
  auto check_self_zero = [&] {
    const Path aa = Path::of(q, {a.arrows().back(), a[0]});
    const Path bb = Path::of(q, {b.arrows().back(), b[0]});
    if (!iv.matches_subpath_rule(aa) || !iv.matches_subpath_rule(bb))
      fail(ErrorCode::InvariantViolation, "type 4/5 relation whose cycles repeat outside I");
  };
  if (u.length() % ab.length() == 0) {
    const std::size_t m = u.length() / ab.length();
    if (u == ab.power(m) && v == ba.power(m)) {
      check_self_zero();
      return RelationClass{idx, false, shape::Type4{x, a, b, m}};
    }
  }
  if (u.length() > a.length() && (u.length() - a.length()) % ab.length() == 0) {
    const std::size_t m = (u.length() - a.length()) / ab.length();
    if (m >= 1 && u == ab.power(m).then(a) && v == ba.power(m).then(b)) {
      check_self_zero();
      return RelationClass{idx, false, shape::Type5{x, a, b, m}};
    }
  }
  return std::nullopt;
}

std::optional<RelationClass> classify_open(const Quiver& q, std::size_t idx, const Path& u, const Path& v) {
  for (bool swapped : {false, true}) {
    const Path& U = swapped ? v : u;
    const Path& V = swapped ? u : v;
    if (auto a = leading_cycle(q, U)) {
      Path p = U.slice(q, a->length(), U.length() - a->length());
      if (V.length() > p.length() && V.starts_with(p.arrows())) {
        Path b = V.slice(q, p.length(), V.length() - p.length());
        return RelationClass{idx, swapped, shape::Type1{*a, p, b}};
      }
    }
  }
  if (shares_arrow(u, v)) return std::nullopt;

  for (bool swapped : {false, true}) {
    const Path& U = swapped ? v : u;
    const Path& V = swapped ? u : v;
    auto a = leading_cycle(q, U);
    if (!a) continue;
    auto sa = split_start(q, U, *a);
    if (!sa) continue;
    if (auto b = trailing_cycle(q, V)) {
      if (auto sb = split_end(q, V, *b))
        return RelationClass{idx, swapped, shape::Type2{*a, sa->second, sa->first, *b, sb->second, sb->first}};
    }
  }
  for (bool swapped : {false, true}) {
    const Path& U = swapped ? v : u;
    const Path& V = swapped ? u : v;
    if (!cycle_free_ends(q, V)) continue;
    if (auto a = leading_cycle(q, U)) {
      if (auto sa = split_start(q, U, *a))
        return RelationClass{idx, swapped,
                             shape::Type2Degenerate{*a, sa->second, sa->first, true, V, first_meet(q, u, v)}};
    }
    if (auto a = trailing_cycle(q, U)) {
      if (auto sa = split_end(q, U, *a))
        return RelationClass{idx, swapped,
                             shape::Type2Degenerate{*a, sa->second, sa->first, false, V, first_meet(q, u, v)}};
    }
  }
  return std::nullopt;
}

}  // namespace

RelationClass classify_relation(const ValidatedPresentation& vp, std::size_t relation) {
  const Quiver& q = vp.quiver();
  const auto& binomials = vp.presentation().binomials();
  if (relation >= binomials.size()) fail(ErrorCode::InvariantViolation, "relation index out of range");
  const Path& u = binomials[relation].u;
  const Path& v = binomials[relation].v;

  std::optional<RelationClass> out;
  if (u.source() == u.target()) {
    out = classify_closed(vp.ideal(), relation, u, v);
  } else if (cycle_free_ends(q, u) && cycle_free_ends(q, v)) {
    out = RelationClass{relation, false, shape::R2{u, v, first_meet(q, u, v)}};
  } else {
    out = classify_open(q, relation, u, v);
  }
  if (!out)
    fail(ErrorCode::ClassificationFailure,
         "relation '" + format_path(q, u) + " = " + format_path(q, v) + "' matches no relation type");
  const auto [ru, rv] = out->recompose();
  if (ru != u || rv != v)
    fail(ErrorCode::InvariantViolation, "classified shape does not rebuild relation '" + format_path(q, u) + "'");
  return *out;
}

std::vector<RelationClass> classify_relations(const ValidatedPresentation& vp) {
  std::vector<RelationClass> out;
  for (std::size_t i = 0; i < vp.presentation().binomials().size(); ++i) out.push_back(classify_relation(vp, i));
  return out;
}

RelationPartition partition_relations(const ValidatedPresentation& vp) {
  RelationPartition out;
  for (RelationClass& c : classify_relations(vp)) (c.in_r1() ? out.r1 : out.r2).push_back(std::move(c));
  return out;
}

std::int64_t CycleGraph::euler_characteristic() const {
  return static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(vertices.size()) +
         static_cast<std::int64_t>(num_components);
}

namespace {

// The two cycles joined by a relation's edge, and the bridge between them.
struct EdgeEnds {
  Path from, to;
  Walk bridge;
  std::string label;
};

std::optional<EdgeEnds> edge_ends(const Quiver& q, const RelationClass& c) {
  return std::visit(
      [&](const auto& s) -> std::optional<EdgeEnds> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, shape::Type1>) {
          return EdgeEnds{s.a, s.b, Walk::of(s.p), format_path(q, s.p)};
        } else if constexpr (std::is_same_v<S, shape::Type2>) {
          return EdgeEnds{s.a, s.b, Walk::of(s.a1), format_path(q, s.a1)};
        } else if constexpr (std::is_same_v<S, shape::Type3> || std::is_same_v<S, shape::Type4> ||
                             std::is_same_v<S, shape::Type5>) {
          return EdgeEnds{s.a, s.b, Walk::trivial(s.x), q.point_name(s.x)};
        } else {
          return std::nullopt;
        }
      },
      c.shape);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

CycleGraph build_cycle_graph(const ValidatedPresentation& vp) {
  return build_cycle_graph(vp, classify_relations(vp));
}

CycleGraph build_cycle_graph(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes) {
  const Quiver& q = vp.quiver();
  const auto& binomials = vp.presentation().binomials();
  CycleGraph g;

  // Vertices: every leading or trailing cycle of a side of an R1 relation.
  std::vector<Path> reps;
  for (const RelationClass& c : classes) {
    if (!c.in_r1()) continue;
    for (const Path* p : {&binomials[c.relation].u, &binomials[c.relation].v}) {
      for (auto cyc : {leading_cycle(q, *p), trailing_cycle(q, *p)})
        if (cyc) reps.push_back(cycle_class_of(q, *cyc).representative);
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (const Path& r : reps) g.vertices.push_back(cycle_class_of(q, r));

  auto vertex_of = [&](const Path& cycle) {
    const Path rep = cycle_class_of(q, cycle).representative;
    auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep)
      fail(ErrorCode::InvariantViolation, "cycle '" + format_path(q, cycle) + "' is not a vertex of the cycle graph");
    return static_cast<std::size_t>(it - reps.begin());
  };

  std::size_t r1_count = 0;
  for (const RelationClass& c : classes) {
    if (!c.in_r1()) continue;
    ++r1_count;
    auto ends = edge_ends(q, c);
    if (!ends) {
      g.degenerate.push_back(c.relation);
      continue;
    }
    GammaEdge e;
    e.from = vertex_of(ends->from);
    e.to = vertex_of(ends->to);
    e.relation = c.relation;
    e.type = c.type();
    e.anchor = binomials[c.relation].u.source();
    e.bridge = ends->bridge;
    e.label = ends->label;
    if (e.from == e.to)
      fail(ErrorCode::InvariantViolation,
           "relation '" + format_path(q, binomials[c.relation].u) + "' gives a loop in the cycle graph");
    g.edges.push_back(std::move(e));
  }
  if (g.edges.size() + g.degenerate.size() != r1_count)
    fail(ErrorCode::InvariantViolation, "cycle graph edge count does not match R1");

  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const GammaEdge& e : g.edges) parent[find_root(parent, e.from)] = find_root(parent, e.to);
  std::map<std::size_t, std::size_t> label;
  g.component.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto [it, fresh] = label.emplace(find_root(parent, i), label.size());
    g.component[i] = it->second;
  }
  g.num_components = label.size();

  g.component_type.assign(g.num_components, std::nullopt);
  std::vector<std::size_t> edges_in(g.num_components, 0), vertices_in(g.num_components, 0);
  std::vector<std::size_t> degree(g.vertices.size(), 0);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) ++vertices_in[g.component[i]];
  for (const GammaEdge& e : g.edges) {
    const std::size_t k = g.component[e.from];
    auto& t = g.component_type[k];
    if (t && *t != e.type)
      fail(ErrorCode::InvariantViolation, "cycle graph component mixes " + std::string(to_string(*t)) + " and " +
                                              std::string(to_string(e.type)) + " edges");
    t = e.type;
    ++edges_in[k];
    ++degree[e.from];
    ++degree[e.to];
  }
  for (std::size_t k = 0; k < g.num_components; ++k) {
    const auto& t = g.component_type[k];
    if (!t) continue;
    if ((*t == RelationType::Type4 || *t == RelationType::Type5) && (edges_in[k] != 1 || vertices_in[k] != 2))
      fail(ErrorCode::InvariantViolation, "type 4/5 component of the cycle graph is not a single edge");
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& t = g.component_type[g.component[i]];
    if (t && *t == RelationType::Type1 && degree[i] > 2)
      fail(ErrorCode::InvariantViolation, "type 1 component of the cycle graph has a vertex of degree > 2");
  }
  return g;
}

std::string cycle_graph_to_dot(const Quiver& q, const CycleGraph& g) {
  std::ostringstream os;
  os << "graph gamma {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << format_path(q, g.vertices[i].representative) << "\"];\n";
  for (const GammaEdge& e : g.edges)
    os << "  v" << e.from << " -- v" << e.to << " [label=\"" << to_string(e.type) << " " << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qbsa
