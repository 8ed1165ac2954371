#include <doctest.h>

#include "qbsa/error.hpp"
#include "qbsa/homology.hpp"
#include "qbsa/linalg.hpp"
#include "support/instances.hpp"

using namespace qbsa;
using qbsa::testing::validated;
using qbsa::testing::walk;

TEST_CASE("rank over Q and over F_p") {
  const IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 2}}, 2);
  CHECK(matrix_rank(m, Characteristic(0)) == 2);
  CHECK(matrix_rank(m, Characteristic(2)) == 0);
  CHECK(matrix_rank(m, Characteristic(3)) == 2);
  const IntMatrix dep = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(matrix_rank(dep, Characteristic(0)) == 2);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {7, 4}}, 2)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}, 3)) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
}

TEST_CASE("smith normal form of a known matrix") {
  // Z^3 / rows = Z/2 + Z/6 + Z/12.
  const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const SmithForm s = smith_normal_form(m);
  CHECK(s.entries == std::vector<BigInt>{2, 6, 12});
  CHECK(s.left * m * s.right == s.diagonal);
}

TEST_CASE("smith normal form of a rectangular matrix") {
  const IntMatrix m = IntMatrix::from_rows({{1, -1, 0, 0}, {0, 2, 0, -2}}, 4);
  const SmithForm s = smith_normal_form(m);
  CHECK(s.entries == std::vector<BigInt>{1, 2});
  CHECK(s.left * m * s.right == s.diagonal);
  CHECK(abs(determinant(s.left)) == 1);
  CHECK(abs(determinant(s.right)) == 1);
}

TEST_CASE("walk vectors") {
  const auto vp = validated("kronecker");
  const Quiver& q = vp.quiver();
  const ArrowVector v = walk_vector(q, walk(q, "a b^-1"));
  CHECK(v.coeffs() == std::vector<std::int64_t>{1, -1});
  CHECK(in_cycle_space(q, v));
  CHECK_FALSE(in_cycle_space(q, ArrowVector(std::vector<std::int64_t>{1, 0})));
  CHECK_THROWS_AS(walk_vector(q, walk(q, "a")), Error);
}

TEST_CASE("integer rank of arrow vectors") {
  const std::vector<ArrowVector> vs{ArrowVector(std::vector<std::int64_t>{2, 0}),
                                    ArrowVector(std::vector<std::int64_t>{0, 2})};
  CHECK(integer_rank(vs) == 2);
  CHECK(integer_rank(vs, Characteristic(2)) == 0);
}

TEST_CASE("closed walk simplification") {
  const auto vp = validated("two_loops");
  const Quiver& q = vp.quiver();
  CHECK(simplify_closed_walk(q, walk(q, "a a^-1 b")) == walk(q, "b"));
  // Conjugation is removed by cyclic reduction.
  CHECK(simplify_closed_walk(q, walk(q, "a b a^-1")).length() == 1);
}

TEST_CASE("euler report of the double cycle") {
  const EulerReport r = euler_report(validated("double_cycle_type3"));
  CHECK(r.dim_s == 4);
  CHECK(r.r1 == 4);
  CHECK(r.r2 == 0);
  CHECK(r.gamma0 == 2);
  CHECK(r.gamma1 == 4);
  CHECK(r.chi_gamma == 3);
  CHECK(r.rk_c0 == 2);
  CHECK(r.rk_c1 == 3);
  CHECK(r.rk_c2 == 0);
  CHECK(r.rk_total == 5);
  CHECK(r.chi_q == 5);
  CHECK_FALSE(r.equality);
  CHECK_FALSE(r.acyclic);
}

TEST_CASE("euler report with equality") {
  const EulerReport r = euler_report(validated("ladder_2x4"));
  CHECK(r.dim_s == 3);
  CHECK(r.rk_c2 == 3);
  CHECK(r.chi_q == 3);
  CHECK(r.equality);
  CHECK(r.acyclic);
}

TEST_CASE("degenerate type 2 contributes to C2") {
  const EulerReport r = euler_report(validated("degenerate_type2"));
  CHECK(r.degenerate == 1);
  CHECK(r.rk_c0 == 1);
  CHECK(r.rk_c2 == 1);
  CHECK(r.rk_total == 2);
  CHECK(r.chi_q == 2);
}

TEST_CASE("phi2 walk of the commutative square") {
  const auto vp = validated("commutative_square");
  const Quiver& q = vp.quiver();
  const auto cls = classify_relations(vp);
  CHECK(phi2_walk(q, cls[0]) == walk(q, "a b d^-1 c^-1"));
  const auto v = phi2_vectors(vp, cls);
  REQUIRE(v.size() == 1);
  CHECK(v[0].coeffs() == std::vector<std::int64_t>{1, 1, -1, -1});
}

TEST_CASE("phi1 vectors lie in the cycle space") {
  const auto vp = validated("double_cycle_type2");
  const CycleGraph g = build_cycle_graph(vp);
  const auto v1 = phi1_vectors(vp, g);
  CHECK(v1.size() == 3);
  for (const auto& v : v1) {
    CHECK(in_cycle_space(vp.quiver(), v));
    CHECK_FALSE(v.is_zero());
  }
}

TEST_CASE("phi0 vectors are cycle indicators") {
  const auto vp = validated("two_loops");
  const auto v0 = phi0_vectors(vp.quiver(), build_cycle_graph(vp));
  CHECK(v0.size() == 2);
  CHECK(v0[0].coeffs() == std::vector<std::int64_t>{1, 0});
  CHECK(v0[1].coeffs() == std::vector<std::int64_t>{0, 1});
}
