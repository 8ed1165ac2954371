#include "qbsa/fundamental_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "qbsa/error.hpp"

namespace qbsa {

namespace {

std::vector<ArrowId> incident_arrows(const Quiver& q, PointId x) {
  std::vector<ArrowId> out(q.out_arrows(x).begin(), q.out_arrows(x).end());
  out.insert(out.end(), q.in_arrows(x).begin(), q.in_arrows(x).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupWord reduce_word(const GroupWord& w) {
  GroupWord out;
  for (const GroupLetter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

GroupPresentation pi1_presentation(const ValidatedPresentation& vp) {
  const Quiver& q = vp.quiver();
  GroupPresentation g;
  std::vector<bool> seen(q.num_points(), false), tree(q.num_arrows(), false);
  for (std::size_t r = 0; r < q.num_points(); ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    g.basepoints.push_back(point_at(r));
    std::deque<PointId> queue{point_at(r)};
    while (!queue.empty()) {
      const PointId x = queue.front();
      queue.pop_front();
      for (ArrowId a : incident_arrows(q, x)) {
        const PointId y = q.source(a) == x ? q.target(a) : q.source(a);
        if (seen[index(y)]) continue;
        seen[index(y)] = true;
        tree[index(a)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::size_t> gen_of(q.num_arrows(), 0);
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    if (tree[i]) {
      g.tree_arrows.push_back(arrow_at(i));
    } else {
      gen_of[i] = g.generators.size();
      g.generators.push_back(arrow_at(i));
    }
  }
  // Tree letters are trivial in pi1, so the conjugating tree paths to the
  // basepoint drop out and u v^-1 alone gives the relator.
  for (const Binomial& b : vp.presentation().binomials()) {
    GroupWord w;
    for (ArrowId a : b.u.arrows())
      if (!tree[index(a)]) w.push_back({gen_of[index(a)], 1});
    for (auto it = b.v.arrows().rbegin(); it != b.v.arrows().rend(); ++it)
      if (!tree[index(*it)]) w.push_back({gen_of[index(*it)], -1});
    g.relators.push_back(reduce_word(w));
  }
  if (static_cast<std::int64_t>(g.generators.size()) != euler_characteristic(q))
    fail(ErrorCode::InvariantViolation, "pi1 generator count differs from chi(Q)");
  return g;
}

std::string format_group_word(const Quiver& q, const GroupPresentation& g, const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += q.arrow(g.generators[w[i].generator]).name;
    if (w[i].exponent < 0) out += "^-1";
  }
  return out;
}

std::string format_group_presentation(const Quiver& q, const GroupPresentation& g) {
  std::string out = "<";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i) out += ", ";
    out += q.arrow(g.generators[i]).name;
  }
  out += " | ";
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_group_word(q, g, g.relators[i]);
  }
  out += ">";
  return out;
}

IntMatrix relator_matrix(const GroupPresentation& g) {
  IntMatrix m(g.relators.size(), g.generators.size());
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (const GroupLetter& l : g.relators[r]) m(r, l.generator) += l.exponent;
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& g) {
  AbelianInvariants out;
  out.smith = smith_normal_form(relator_matrix(g));
  for (const BigInt& d : out.smith.entries) {
    if (d == 0) continue;
    out.invariant_factors.push_back(d);
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = g.generators.size() - out.invariant_factors.size();
  return out;
}

std::size_t hom_additive_dim(const GroupPresentation& g, Characteristic c) {
  return g.generators.size() - matrix_rank(relator_matrix(g), c);
}

std::size_t source_class_count(const ValidatedPresentation& vp, PointId x) {
  const Quiver& q = vp.quiver();
  if (!q.in_arrows(x).empty())
    fail(ErrorCode::NotASource, "point '" + q.point_name(x) + "' has incoming arrows");
  const auto outs = q.out_arrows(x);
  std::vector<std::size_t> parent(outs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto slot = [&](ArrowId a) { return static_cast<std::size_t>(std::find(outs.begin(), outs.end(), a) - outs.begin()); };
  for (const Binomial& b : vp.presentation().binomials())
    if (b.u.source() == x) parent[find_root(parent, slot(b.u[0]))] = find_root(parent, slot(b.v[0]));
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < outs.size(); ++i) roots.insert(find_root(parent, i));
  if (!outs.empty() && roots.size() > 2)
    fail(ErrorCode::InvariantViolation, "source '" + q.point_name(x) + "' has more than two arrow classes");
  return roots.size();
}

std::int64_t peeling_free_rank(const ValidatedPresentation& vp) {
  const Quiver& q = vp.quiver();
  if (q.has_oriented_cycle()) fail(ErrorCode::InvariantViolation, "source peeling needs an acyclic quiver");
  const auto& binomials = vp.presentation().binomials();
  std::vector<bool> point_alive(q.num_points(), true), arrow_alive(q.num_arrows(), true);
  std::size_t arrows_left = q.num_arrows();
  std::int64_t total = 0;

  while (arrows_left > 0) {
    // Least point with live outgoing arrows and no live incoming ones.
    PointId x{};
    bool found = false;
    for (std::size_t i = 0; i < q.num_points() && !found; ++i) {
      if (!point_alive[i]) continue;
      const PointId p = point_at(i);
      const auto live = [&](ArrowId a) { return arrow_alive[index(a)]; };
      if (std::none_of(q.in_arrows(p).begin(), q.in_arrows(p).end(), live) &&
          std::any_of(q.out_arrows(p).begin(), q.out_arrows(p).end(), live)) {
        x = p;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::InvariantViolation, "no source left while peeling");

    // t(x): classes of x's arrows under the binomials starting at x.
    const auto outs = q.out_arrows(x);
    std::vector<std::size_t> cls(outs.size());
    std::iota(cls.begin(), cls.end(), 0);
    auto slot = [&](ArrowId a) {
      return static_cast<std::size_t>(std::find(outs.begin(), outs.end(), a) - outs.begin());
    };
    for (const Binomial& b : binomials)
      if (b.u.source() == x) cls[find_root(cls, slot(b.u[0]))] = find_root(cls, slot(b.v[0]));
    std::set<std::size_t> classes;
    for (std::size_t i = 0; i < outs.size(); ++i) classes.insert(find_root(cls, i));

    point_alive[index(x)] = false;
    for (ArrowId a : outs) {
      arrow_alive[index(a)] = false;
      --arrows_left;
    }

    // c(x): components of what remains that x's arrows reach.
    std::vector<std::size_t> comp(q.num_points());
    std::iota(comp.begin(), comp.end(), 0);
    for (std::size_t i = 0; i < q.num_arrows(); ++i)
      if (arrow_alive[i]) comp[find_root(comp, index(q.source(arrow_at(i))))] = find_root(comp, index(q.target(arrow_at(i))));
    std::set<std::size_t> reached;
    for (ArrowId a : outs) reached.insert(find_root(comp, index(q.target(a))));

    total += static_cast<std::int64_t>(classes.size()) - static_cast<std::int64_t>(reached.size());
  }
  return total;
}

TriangularRank triangular_free_rank(const ValidatedPresentation& vp) {
  const Quiver& q = vp.quiver();
  if (q.has_oriented_cycle()) return NotTriangular{};
  const std::int64_t direct =
      euler_characteristic(q) - static_cast<std::int64_t>(vp.presentation().binomials().size());
  const std::int64_t peeled = peeling_free_rank(vp);
  if (direct != peeled)
    fail(ErrorCode::InductionMismatch, "chi(Q) - dimS = " + std::to_string(direct) +
                                           " but source peeling gives " + std::to_string(peeled));
  return direct;
}

}  // namespace qbsa
