#include "qbsa/homology.hpp"

#include <algorithm>
#include <deque>

#include "qbsa/error.hpp"
#include "qbsa/linalg.hpp"

namespace qbsa {

bool ArrowVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

ArrowVector walk_vector(const Quiver& q, const Walk& w) {
  if (!w.is_closed()) fail(ErrorCode::NotClosed, "walk '" + format_walk(q, w) + "' is not closed");
  ArrowVector v(q.num_arrows());
  for (const Letter& l : w.letters()) v[l.arrow] += l.exponent();
  return v;
}

std::vector<std::int64_t> boundary(const Quiver& q, const ArrowVector& v) {
  std::vector<std::int64_t> out(q.num_points(), 0);
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const ArrowId a = arrow_at(i);
    out[index(q.target(a))] += v[a];
    out[index(q.source(a))] -= v[a];
  }
  return out;
}

bool in_cycle_space(const Quiver& q, const ArrowVector& v) {
  const auto b = boundary(q, v);
  return std::all_of(b.begin(), b.end(), [](std::int64_t c) { return c == 0; });
}

std::size_t integer_rank(std::span<const ArrowVector> vectors, Characteristic c) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<std::int64_t>> rows;
  for (const ArrowVector& v : vectors) rows.push_back(v.coeffs());
  return matrix_rank(IntMatrix::from_rows(rows, vectors.front().size()), c);
}

std::vector<ArrowVector> phi0_vectors(const Quiver& q, const CycleGraph& g) {
  std::vector<ArrowVector> out;
  for (const CycleClass& c : g.vertices) out.push_back(walk_vector(q, Walk::of(c.representative)));
  if (integer_rank(out) != out.size())
    fail(ErrorCode::IndependenceViolation, "cycle graph vertices have dependent indicator vectors");
  return out;
}

namespace {

Walk make_walk(const Quiver& q, PointId at, std::vector<Letter> letters) {
  if (letters.empty()) return Walk::trivial(at);
  return Walk::of(q, std::move(letters));
}

// Strips l ... l^-1 from the two ends; the homology class is unchanged.
Walk cyclically_reduce(const Quiver& q, const Walk& w) {
  Walk r = reduce_walk(q, w);
  std::vector<Letter> ls = r.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverted()) ++lo, --hi;
  if (lo == 0) return r;
  const PointId at = ls[lo].source(q);
  return make_walk(q, at, std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                              ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

// The stretch of a cycle class from point s to the first later visit of t.
Walk along_cycle(const Quiver& q, const CycleClass& c, PointId s, PointId t) {
  for (const Path& r : c.rotations) {
    if (r.source() != s) continue;
    const auto pts = r.points(q);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == t) return Walk::of(r.slice(q, 0, i));
  }
  fail(ErrorCode::InvariantViolation, "point '" + q.point_name(t) + "' is not on cycle '" +
                                          format_path(q, c.representative) + "' after '" + q.point_name(s) + "'");
}

struct Step {
  std::size_t edge;
  bool forward;
};

}  // namespace

Walk simplify_closed_walk(const Quiver& q, const Walk& w) {
  if (!w.is_closed()) fail(ErrorCode::NotClosed, "walk '" + format_walk(q, w) + "' is not closed");
  Walk cur = cyclically_reduce(q, w);
  for (;;) {
    const auto pts = cur.points(q);
    const std::size_t n = cur.length();
    std::size_t cut_i = 0, cut_j = 0;
    for (std::size_t j = 1; j <= n && cut_j == 0; ++j) {
      for (std::size_t i = j; i-- > 0;) {
        if (pts[i] != pts[j] || (i == 0 && j == n)) continue;
        cut_i = i;
        cut_j = j;
        break;
      }
    }
    if (cut_j == 0) return cur;
    std::vector<Letter> ls = cur.letters();
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(cut_i), ls.begin() + static_cast<std::ptrdiff_t>(cut_j));
    cur = cyclically_reduce(q, make_walk(q, pts[0], std::move(ls)));
  }
}

std::vector<ArrowVector> phi1_vectors(const ValidatedPresentation& vp, const CycleGraph& g) {
  const Quiver& q = vp.quiver();
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].from].push_back(e);
    incident[g.edges[e].to].push_back(e);
  }

  // Breadth-first spanning forest, roots taken in vertex order.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nv, none), parent_edge(nv, none), depth(nv, 0);
  std::vector<bool> seen(nv, false), tree_edge(g.edges.size(), false);
  for (std::size_t root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t e : incident[x]) {
        const std::size_t y = g.edges[e].from == x ? g.edges[e].to : g.edges[e].from;
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        parent_edge[y] = e;
        depth[y] = depth[x] + 1;
        tree_edge[e] = true;
        queue.push_back(y);
      }
    }
  }

  auto step_up = [&](std::size_t x) { return Step{parent_edge[x], g.edges[parent_edge[x]].from == x}; };

  std::vector<ArrowVector> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    const GammaEdge& chord = g.edges[e];
    // chord forward, then the tree path from chord.to back to chord.from.
    std::vector<Step> steps{{e, true}};
    std::size_t a = chord.to, b = chord.from;
    std::vector<Step> down;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        steps.push_back(step_up(a));
        a = parent[a];
      } else {
        Step s = step_up(b);
        down.push_back({s.edge, !s.forward});
        b = parent[b];
      }
    }
    steps.insert(steps.end(), down.rbegin(), down.rend());

    struct Leg {
      PointId depart, arrive;
      Walk walk;
      std::size_t lands_on;
    };
    std::vector<Leg> legs;
    for (const Step& s : steps) {
      const GammaEdge& ge = g.edges[s.edge];
      if (s.forward)
        legs.push_back({ge.bridge.source(), ge.bridge.target(), ge.bridge, ge.to});
      else
        legs.push_back({ge.bridge.target(), ge.bridge.source(), ge.bridge.inverse(), ge.from});
    }
    Walk w = Walk::trivial(legs.front().depart);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      const Leg& next = legs[(k + 1) % legs.size()];
      w = w.then(legs[k].walk).then(along_cycle(q, g.vertices[legs[k].lands_on], legs[k].arrive, next.depart));
    }
    const ArrowVector v = walk_vector(q, simplify_closed_walk(q, w));
    if (!in_cycle_space(q, v)) fail(ErrorCode::InvariantViolation, "phi1 vector outside the cycle space");
    out.push_back(v);
  }
  return out;
}

Walk phi2_walk(const Quiver& q, const RelationClass& c) {
  const FirstMeet* meet = nullptr;
  if (const auto* r2 = std::get_if<shape::R2>(&c.shape)) meet = &r2->meet;
  if (const auto* dg = std::get_if<shape::Type2Degenerate>(&c.shape)) meet = &dg->meet;
  if (!meet) fail(ErrorCode::InvariantViolation, "phi2 applies only to R2 and degenerate type 2 relations");
  return reduce_walk(q, Walk::of(meet->u1).then(Walk::of(meet->v1).inverse()));
}

std::vector<ArrowVector> phi2_vectors(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes) {
  const Quiver& q = vp.quiver();
  std::vector<ArrowVector> out;
  for (const RelationClass& c : classes) {
    const RelationType t = c.type();
    if (t != RelationType::R2 && t != RelationType::Type2Degenerate) continue;
    out.push_back(walk_vector(q, phi2_walk(q, c)));
  }
  if (integer_rank(out) != out.size())
    fail(ErrorCode::IndependenceViolation, "R2 relation walks have dependent vectors");
  return out;
}

EulerReport euler_report(const ValidatedPresentation& vp) {
  const auto classes = classify_relations(vp);
  return euler_report(vp, classes, build_cycle_graph(vp, classes));
}

EulerReport euler_report(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes,
                         const CycleGraph& g) {
  const Quiver& q = vp.quiver();
  EulerReport r;
  r.dim_s = vp.presentation().binomials().size();
  for (const RelationClass& c : classes) (c.in_r1() ? r.r1 : r.r2)++;
  r.degenerate = g.degenerate.size();
  r.gamma0 = g.vertices.size();
  r.gamma1 = g.edges.size();
  r.gamma_components = g.num_components;
  r.chi_gamma = g.euler_characteristic();
  r.chi_q = euler_characteristic(q);
  r.acyclic = !q.has_oriented_cycle();

  const auto c0 = phi0_vectors(q, g);
  const auto c1 = phi1_vectors(vp, g);
  const auto c2 = phi2_vectors(vp, classes);
  r.rk_c0 = integer_rank(c0);
  r.rk_c1 = integer_rank(c1);
  r.rk_c2 = integer_rank(c2);
  std::vector<ArrowVector> all = c0;
  all.insert(all.end(), c1.begin(), c1.end());
  all.insert(all.end(), c2.begin(), c2.end());
  r.rk_total = integer_rank(all);
  r.equality = static_cast<std::int64_t>(r.dim_s) == r.chi_q;

  for (const ArrowVector& v : all)
    if (!in_cycle_space(q, v)) fail(ErrorCode::InvariantViolation, "homology vector outside the cycle space");
  if (r.dim_s != r.gamma1 + r.degenerate + r.r2)
    fail(ErrorCode::InvariantViolation, "dimS differs from |Gamma1| + |R2| + degenerate");
  if (r.rk_total != r.rk_c0 + r.rk_c1 + r.rk_c2)
    fail(ErrorCode::IndependenceViolation, "C0 + C1 + C2 is not a direct sum: rank " + std::to_string(r.rk_total) +
                                               " < " + std::to_string(r.rk_c0 + r.rk_c1 + r.rk_c2));
  if (static_cast<std::int64_t>(r.dim_s) > r.chi_q)
    fail(ErrorCode::InequalityViolation,
         "dimS = " + std::to_string(r.dim_s) + " exceeds chi(Q) = " + std::to_string(r.chi_q));
  if (r.equality && !r.acyclic) fail(ErrorCode::InequalityViolation, "dimS = chi(Q) but Q has an oriented cycle");
  if (r.equality && r.r1 != 0) fail(ErrorCode::InequalityViolation, "dimS = chi(Q) but R1 is nonempty");
  return r;
}

}  // namespace qbsa
