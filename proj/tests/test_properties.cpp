#include <doctest.h>

#include <chrono>
#include <map>
#include <random>

#include "qbsa/dsl.hpp"
#include "qbsa/homology.hpp"
#include "qbsa/linalg.hpp"
#include "qbsa/verdict.hpp"
#include "support/generator.hpp"

using namespace qbsa;

namespace {

constexpr std::uint32_t kSeed = 7u;

struct Instance {
  Presentation presentation;
  AnalysisReport report;
};

const std::vector<Instance>& family() {
  static const std::vector<Instance> out = [] {
    std::vector<Instance> v;
    for (auto& p : qbsa::testing::random_family(kSeed, 600)) {
      AnalysisReport r = analyze(p);
      v.push_back({std::move(p), std::move(r)});
    }
    return v;
  }();
  return out;
}

}  // namespace

TEST_CASE("family size and running time") {
  const auto start = std::chrono::steady_clock::now();
  const auto& f = family();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(f.size() >= 500);
  CHECK(seconds < 60.0);
  for (const auto& i : f) CHECK(i.presentation.quiver().num_points() <= 12);
}

TEST_CASE("dimS never exceeds chi") {
  for (const auto& i : family()) {
    CAPTURE(serialize(i.presentation));
    CHECK(static_cast<std::int64_t>(i.report.dim_s) <= i.report.chi);
    CHECK(i.report.dim_s == i.presentation.binomials().size());
  }
}

TEST_CASE("equality forces the simply connected picture") {
  int equalities = 0;
  for (const auto& i : family()) {
    const auto& r = i.report;
    if (static_cast<std::int64_t>(r.dim_s) != r.chi) continue;
    ++equalities;
    CAPTURE(serialize(i.presentation));
    CHECK(r.euler.acyclic);
    CHECK(r.bypasses.empty());
    CHECK(r.gamma.vertices.empty());
    CHECK(r.gamma.edges.empty());
    CHECK(r.euler.r1 == 0);
    CHECK(r.bands.rep_finite);
    CHECK(r.abelian.is_trivial());
    for (int c : {0, 2, 3}) CHECK(hom_additive_dim(r.pi1, Characteristic(c)) == 0);
    CHECK(r.verdict.simply_connected);
  }
  CHECK(equalities > 0);
}

TEST_CASE("C0 + C1 + C2 is direct") {
  for (const auto& i : family()) {
    const auto vp = check_special_biserial(i.presentation);
    const auto& r = i.report;
    std::vector<ArrowVector> all = phi0_vectors(vp.quiver(), r.gamma);
    const auto v1 = phi1_vectors(vp, r.gamma);
    const auto v2 = phi2_vectors(vp, r.relations);
    all.insert(all.end(), v1.begin(), v1.end());
    all.insert(all.end(), v2.begin(), v2.end());
    std::size_t phi2_count = 0;
    for (const auto& c : r.relations)
      phi2_count += (c.type() == RelationType::R2 || c.type() == RelationType::Type2Degenerate) ? 1 : 0;
    CAPTURE(serialize(i.presentation));
    CHECK(v2.size() == phi2_count);
    const std::int64_t expected =
        static_cast<std::int64_t>(r.gamma.vertices.size()) + r.gamma.euler_characteristic() + static_cast<std::int64_t>(phi2_count);
    CHECK(static_cast<std::int64_t>(integer_rank(all)) == expected);
    CHECK(r.euler.rk_total == integer_rank(all));
  }
}

TEST_CASE("cycle graph shape") {
  for (const auto& i : family()) {
    const auto& g = i.report.gamma;
    std::size_t r1 = 0, degenerate = 0;
    for (const auto& c : i.report.relations) {
      r1 += c.in_r1() ? 1 : 0;
      degenerate += c.type() == RelationType::Type2Degenerate ? 1 : 0;
    }
    CAPTURE(serialize(i.presentation));
    CHECK(g.edges.size() == r1 - degenerate);
    std::map<std::size_t, RelationType> component_type;
    for (const auto& e : g.edges) {
      CHECK(e.from != e.to);
      CHECK(g.component[e.from] == g.component[e.to]);
      auto [it, fresh] = component_type.emplace(g.component[e.from], e.type);
      CHECK(it->second == e.type);
    }
  }
}

TEST_CASE("fundamental group counts") {
  for (const auto& i : family()) {
    const auto& r = i.report;
    CHECK(static_cast<std::int64_t>(r.pi1.generators.size()) == r.chi);
    CHECK(r.pi1.relators.size() == r.dim_s);
    // Free rank never drops below chi - dimS.
    CHECK(static_cast<std::int64_t>(r.abelian.free_rank) >= r.chi - static_cast<std::int64_t>(r.dim_s));
  }
}

TEST_CASE("triangular instances cross-check") {
  int triangular = 0;
  for (const auto& i : family()) {
    const auto& r = i.report;
    if (!r.triangular) continue;
    ++triangular;
    const auto vp = check_special_biserial(i.presentation);
    const std::int64_t expected = r.chi - static_cast<std::int64_t>(r.dim_s);
    CHECK(r.triangular_rank == TriangularRank{expected});
    CHECK(peeling_free_rank(vp) == expected);
    CHECK(static_cast<std::int64_t>(r.abelian.free_rank) == expected);
    CHECK(r.abelian.torsion.empty());
  }
  CHECK(triangular > 0);
}

TEST_CASE("walk vectors ignore free cancellation") {
  std::mt19937 rng(kSeed);
  for (const auto& i : family()) {
    const Quiver& q = i.presentation.quiver();
    if (q.num_arrows() == 0) continue;
    // Random closed walk: go out along random letters, then retrace.
    std::vector<Letter> w;
    PointId at = point_at(std::uniform_int_distribution<std::size_t>(0, q.num_points() - 1)(rng));
    for (int step = 0; step < 6; ++step) {
      std::vector<Letter> options;
      for (ArrowId a : q.out_arrows(at)) options.push_back({a, false});
      for (ArrowId a : q.in_arrows(at)) options.push_back({a, true});
      if (options.empty()) break;
      const Letter l = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      w.push_back(l);
      at = l.target(q);
    }
    if (w.empty()) continue;
    std::vector<Letter> closed = w;
    for (auto it = w.rbegin(); it != w.rend(); ++it) closed.push_back(it->inverted());
    const Walk cw = Walk::of(q, closed);
    CHECK(walk_vector(q, cw).is_zero());
    CHECK(walk_vector(q, reduce_walk(q, cw)).is_zero());
  }
}

TEST_CASE("smith normal form law on random matrices") {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    const IntMatrix m = IntMatrix::from_rows(rows, c);
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t k = 0; k + 1 < s.entries.size(); ++k)
      if (s.entries[k + 1] != 0) CHECK(s.entries[k + 1] % s.entries[k] == 0);
    std::size_t nonzero = 0;
    for (const auto& e : s.entries) nonzero += e != 0 ? 1 : 0;
    CHECK(nonzero == matrix_rank(m, Characteristic(0)));
  }
}
