#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/linalg.hpp"
#include "qbsa/quiver.hpp"
#include "qbsa/scalar.hpp"

namespace qbsa {

struct GroupLetter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  bool operator==(const GroupLetter&) const = default;
};

using GroupWord = std::vector<GroupLetter>;

/// Presentation of pi1(Q, I): one generator per arrow outside a
/// breadth-first spanning forest, one relator per binomial relation.
struct GroupPresentation {
  /// Generator i is the chord arrow generators[i], in arrow order.
  std::vector<ArrowId> generators;
  /// Freely reduced; possibly empty.
  std::vector<GroupWord> relators;
  /// Least point of each component.
  std::vector<PointId> basepoints;
  std::vector<ArrowId> tree_arrows;
};

GroupPresentation pi1_presentation(const ValidatedPresentation& vp);

/// "<g1, ..., gn | r1, ..., rm>" with arrow names as generators.
std::string format_group_presentation(const Quiver& q, const GroupPresentation& g);
std::string format_group_word(const Quiver& q, const GroupPresentation& g, const GroupWord& w);

/// Relators x generators, entry = exponent sum.
IntMatrix relator_matrix(const GroupPresentation& g);

struct AbelianInvariants {
  /// Nonzero Smith diagonal entries, each dividing the next.
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;
  /// Invariant factors greater than 1.
  std::vector<BigInt> torsion;
  SmithForm smith;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
};

AbelianInvariants abelianization(const GroupPresentation& g);

/// Number of generators minus the rank of the relator matrix over the prime
/// field of characteristic c.
std::size_t hom_additive_dim(const GroupPresentation& g, Characteristic c);

/// Classes of the arrows leaving source x, two arrows being equivalent when
/// a binomial relation starts with both. Throws NotASource.
std::size_t source_class_count(const ValidatedPresentation& vp, PointId x);

struct NotTriangular {
  bool operator==(const NotTriangular&) const = default;
};

using TriangularRank = std::variant<std::int64_t, NotTriangular>;

/// For acyclic Q, the free rank of pi1 computed both as chi(Q) - dimS and by
/// peeling sources (each source x adds t(x) - c(x), c(x) being the number of
/// remaining components its arrows reach). Throws InductionMismatch when the
/// two disagree.
TriangularRank triangular_free_rank(const ValidatedPresentation& vp);

/// The peeling count alone; requires acyclic Q.
std::int64_t peeling_free_rank(const ValidatedPresentation& vp);

}  // namespace qbsa
