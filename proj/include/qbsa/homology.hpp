#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/cycles.hpp"
#include "qbsa/quiver.hpp"
#include "qbsa/scalar.hpp"

namespace qbsa {

/// Integer coefficient per arrow: a class in the first homology of the
/// underlying graph when its boundary vanishes.
class ArrowVector {
 public:
  ArrowVector() = default;
  explicit ArrowVector(std::size_t num_arrows) : coeffs_(num_arrows, 0) {}
  explicit ArrowVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::int64_t operator[](ArrowId a) const { return coeffs_[index(a)]; }
  std::int64_t& operator[](ArrowId a) { return coeffs_[index(a)]; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  bool operator==(const ArrowVector&) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Signed arrow count of a closed walk. Throws NotClosed.
ArrowVector walk_vector(const Quiver& q, const Walk& w);

/// Signed point-incidence sum; zero exactly on the cycle space.
std::vector<std::int64_t> boundary(const Quiver& q, const ArrowVector& v);
bool in_cycle_space(const Quiver& q, const ArrowVector& v);

std::size_t integer_rank(std::span<const ArrowVector> vectors, Characteristic c = Characteristic(0));

/// Indicator vector of each vertex of Gamma. Throws IndependenceViolation
/// unless they are independent.
std::vector<ArrowVector> phi0_vectors(const Quiver& q, const CycleGraph& g);

/// One vector per chord of a breadth-first spanning forest of Gamma: the
/// closed walk through the chord's fundamental cycle, switching between
/// quiver cycles along the edge bridges, reduced, with cyclic subwalks cut
/// out leftmost-minimal first.
std::vector<ArrowVector> phi1_vectors(const ValidatedPresentation& vp, const CycleGraph& g);

/// The closed walk of an R2 (or degenerate type 2) relation: u1 v1^-1.
Walk phi2_walk(const Quiver& q, const RelationClass& c);

/// u1 v1^-1 for every R2 and degenerate type 2 relation. Throws
/// IndependenceViolation unless they are independent.
std::vector<ArrowVector> phi2_vectors(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes);

/// Removes the leftmost minimal proper closed subwalk until none is left.
Walk simplify_closed_walk(const Quiver& q, const Walk& w);

struct EulerReport {
  std::size_t dim_s = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  std::size_t degenerate = 0;
  std::size_t gamma0 = 0;
  std::size_t gamma1 = 0;
  std::size_t gamma_components = 0;
  std::int64_t chi_gamma = 0;
  std::size_t rk_c0 = 0;
  std::size_t rk_c1 = 0;
  std::size_t rk_c2 = 0;
  std::size_t rk_total = 0;
  std::int64_t chi_q = 0;
  bool equality = false;
  bool acyclic = false;
};

/// Fills the chain dimS = |Gamma1| + rk C2 <= rk(C0 + C1 + C2) <= chi(Q)
/// and checks it. Throws InequalityViolation when dimS > chi(Q), when the
/// sum C0 + C1 + C2 is not direct, or when equality holds with Q cyclic or
/// R1 nonempty.
EulerReport euler_report(const ValidatedPresentation& vp);
EulerReport euler_report(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes,
                         const CycleGraph& g);

}  // namespace qbsa
