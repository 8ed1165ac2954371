#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/quiver.hpp"

namespace qbsa {

/// A cycle up to cyclic permutation.
struct CycleClass {
  /// Lexicographically smallest rotation (by arrow id).
  Path representative;
  /// The distinct rotations sigma^j(a), j = 0..length-1.
  std::vector<Path> rotations;

  bool contains(const Path& cycle) const;
  bool operator==(const CycleClass& other) const { return representative == other.representative; }
};

/// sigma^j of a closed path: the rotation starting after its first j arrows.
Path rotate(const Quiver& q, const Path& cycle, std::size_t j);

CycleClass cycle_class_of(const Quiver& q, const Path& cycle);

/// Every elementary oriented cycle, one class per rotation orbit, sorted by
/// representative.
std::vector<CycleClass> simple_cycle_classes(const Quiver& q);

/// Prefix of p up to its first return to the source, if it returns.
std::optional<Path> leading_cycle(const Quiver& q, const Path& p);
/// Suffix of p from its last earlier visit to the target, if any.
std::optional<Path> trailing_cycle(const Quiver& q, const Path& p);

/// Repeatedly cuts out the first closed subpath until no point repeats.
Path delete_cycles(const Quiver& q, const Path& p);

enum class RelationType { Type1, Type2, Type3, Type4, Type5, R2, Type2Degenerate };

std::string_view to_string(RelationType t) noexcept;

/// Truncation of u and v at the first point z != x they share (walking
/// along u), with cycles deleted from both prefixes.
struct FirstMeet {
  PointId z{};
  Path u_prime = Path::trivial(PointId{});
  Path v_prime = Path::trivial(PointId{});
  Path u1 = Path::trivial(PointId{});
  Path v1 = Path::trivial(PointId{});
};

namespace shape {

// In every shape, (U, V) is the relation read in the orientation recorded by
// RelationClass::swapped.

/// U = a p, V = p b.
struct Type1 {
  Path a, p, b;
};
/// U = a^n a1 with a1 a proper prefix of a; V = b2 b^m with b2 a proper
/// suffix of b.
struct Type2 {
  Path a, a1;
  std::size_t n;
  Path b, b2;
  std::size_t m;
};
/// U = a^n, V = b^m at x.
struct Type3 {
  PointId x;
  Path a, b;
  std::size_t n, m;
};
/// U = (ab)^m, V = (ba)^m.
struct Type4 {
  PointId x;
  Path a, b;
  std::size_t m;
};
/// U = (ab)^m a, V = (ba)^m b.
struct Type5 {
  PointId x;
  Path a, b;
  std::size_t m;
};
/// U = a^n part (cycle_first) or U = part a^n; V has no cycle at either end.
struct Type2Degenerate {
  Path a, part;
  std::size_t n;
  bool cycle_first;
  Path other;
  FirstMeet meet;
};
/// Neither side starts or ends with a cycle.
struct R2 {
  Path u, v;
  FirstMeet meet;
};

}  // namespace shape

using RelationShape = std::variant<shape::Type1, shape::Type2, shape::Type3, shape::Type4, shape::Type5, shape::R2,
                                   shape::Type2Degenerate>;

struct RelationClass {
  std::size_t relation = 0;  // index into Presentation::binomials()
  bool swapped = false;      // U is the relation's v
  RelationShape shape;

  RelationType type() const noexcept;
  bool in_r1() const noexcept { return type() != RelationType::R2; }
  /// (u, v) rebuilt from the shape's components.
  std::pair<Path, Path> recompose() const;
};

/// Throws ClassificationFailure when no shape matches.
RelationClass classify_relation(const ValidatedPresentation& vp, std::size_t relation);

std::vector<RelationClass> classify_relations(const ValidatedPresentation& vp);

struct RelationPartition {
  std::vector<RelationClass> r1;
  std::vector<RelationClass> r2;
};

RelationPartition partition_relations(const ValidatedPresentation& vp);

struct GammaEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t relation = 0;
  RelationType type = RelationType::Type1;
  /// Starting point of the binomial relation.
  PointId anchor{};
  /// From a point of the `from` cycle to a point of the `to` cycle: p for
  /// type 1, a1 for type 2, trivial at x for types 3-5.
  Walk bridge = Walk::trivial(PointId{});
  std::string label;
};

struct CycleGraph {
  std::vector<CycleClass> vertices;
  std::vector<GammaEdge> edges;
  std::vector<std::size_t> component;  // per vertex
  std::size_t num_components = 0;
  /// Edge type shared by a component; empty for isolated vertices.
  std::vector<std::optional<RelationType>> component_type;
  /// Degenerate type 2 relations: counted in R1 but given no edge.
  std::vector<std::size_t> degenerate;

  /// |edges| - |vertices| + components.
  std::int64_t euler_characteristic() const;
};

/// Builds Gamma and checks its invariants (no loops, homogeneous component
/// types, single-edge type 4/5 components, path-or-cycle type 1 components);
/// violations throw InvariantViolation.
CycleGraph build_cycle_graph(const ValidatedPresentation& vp);
CycleGraph build_cycle_graph(const ValidatedPresentation& vp, const std::vector<RelationClass>& classes);

std::string cycle_graph_to_dot(const Quiver& q, const CycleGraph& g);

}  // namespace qbsa
