#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbsa/scalar.hpp"

namespace qbsa {

enum class PointId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t index(PointId p) noexcept { return static_cast<std::size_t>(p); }
constexpr std::size_t index(ArrowId a) noexcept { return static_cast<std::size_t>(a); }
constexpr PointId point_at(std::size_t i) noexcept { return static_cast<PointId>(i); }
constexpr ArrowId arrow_at(std::size_t i) noexcept { return static_cast<ArrowId>(i); }

struct Arrow {
  std::string name;
  PointId source;
  PointId target;

  bool operator==(const Arrow&) const = default;
};

/// Arrow declaration by names, as read from input.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

/// Finite quiver with points and arrows stored in lexicographic order of
/// their identifiers, so ids double as canonical ranks.
class Quiver {
 public:
  Quiver() = default;

  /// Sorts and validates the declarations. Throws ParseError on duplicate
  /// identifiers and UnknownSymbol on undeclared arrow endpoints.
  static Quiver make(std::vector<std::string> points, std::vector<ArrowSpec> arrows);

  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }
  std::size_t num_components() const noexcept { return num_components_; }

  const std::string& point_name(PointId p) const { return points_[index(p)]; }
  const Arrow& arrow(ArrowId a) const { return arrows_[index(a)]; }
  const std::vector<std::string>& point_names() const noexcept { return points_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  PointId source(ArrowId a) const { return arrows_[index(a)].source; }
  PointId target(ArrowId a) const { return arrows_[index(a)].target; }

  std::optional<PointId> find_point(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  std::span<const ArrowId> out_arrows(PointId p) const { return out_[index(p)]; }
  std::span<const ArrowId> in_arrows(PointId p) const { return in_[index(p)]; }

  /// Component label of a point in the underlying undirected graph.
  std::size_t component_of(PointId p) const { return component_[index(p)]; }

  bool has_oriented_cycle() const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> points_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<std::size_t> component_;
  std::size_t num_components_ = 0;
};

/// Oriented path; trivial paths keep their anchor point.
class Path {
 public:
  static Path trivial(PointId at) { return Path(at, at, {}); }

  /// Throws NonComposablePath if consecutive arrows do not compose, and
  /// InvariantViolation on an empty arrow list.
  static Path of(const Quiver& q, std::vector<ArrowId> arrows);

  PointId source() const noexcept { return source_; }
  PointId target() const noexcept { return target_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
  ArrowId operator[](std::size_t i) const { return arrows_[i]; }

  /// The length+1 points visited, in order.
  std::vector<PointId> points(const Quiver& q) const;

  /// Subpath of `len` arrows starting at arrow position `pos`.
  Path slice(const Quiver& q, std::size_t pos, std::size_t len) const;

  /// Composition this·rhs; throws NonComposablePath on mismatched ends.
  Path then(const Path& rhs) const;

  Path power(std::size_t n) const;

  bool is_parallel_to(const Path& other) const noexcept {
    return source_ == other.source_ && target_ == other.target_;
  }

  /// True if `pattern` occurs as a contiguous block of arrows.
  bool contains(std::span<const ArrowId> pattern) const;
  bool starts_with(std::span<const ArrowId> prefix) const;
  bool ends_with(std::span<const ArrowId> suffix) const;

  bool operator==(const Path&) const = default;
  std::strong_ordering operator<=>(const Path& other) const;

 private:
  Path(PointId s, PointId t, std::vector<ArrowId> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}

  PointId source_{};
  PointId target_{};
  std::vector<ArrowId> arrows_;
};

/// Arrow or formal inverse.
struct Letter {
  ArrowId arrow{};
  bool inverse = false;

  PointId source(const Quiver& q) const { return inverse ? q.target(arrow) : q.source(arrow); }
  PointId target(const Quiver& q) const { return inverse ? q.source(arrow) : q.target(arrow); }
  Letter inverted() const noexcept { return {arrow, !inverse}; }
  int exponent() const noexcept { return inverse ? -1 : 1; }

  bool operator==(const Letter&) const = default;
  /// Canonical letter order: by arrow id, direct before inverse.
  auto operator<=>(const Letter&) const = default;
};

class Walk {
 public:
  static Walk trivial(PointId at) { return Walk(at, at, {}); }
  static Walk of(const Path& p);
  /// Throws NonComposablePath on a broken chain, InvariantViolation if empty.
  static Walk of(const Quiver& q, std::vector<Letter> letters);

  PointId source() const noexcept { return source_; }
  PointId target() const noexcept { return target_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_trivial() const noexcept { return letters_.empty(); }
  bool is_closed() const noexcept { return source_ == target_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  /// No adjacent pair of the form l l^-1.
  bool is_reduced() const;

  std::vector<PointId> points(const Quiver& q) const;

  Walk inverse() const;
  Walk then(const Walk& rhs) const;

  bool operator==(const Walk&) const = default;

 private:
  Walk(PointId s, PointId t, std::vector<Letter> letters)
      : source_(s), target_(t), letters_(std::move(letters)) {}

  PointId source_{};
  PointId target_{};
  std::vector<Letter> letters_;
};

struct Binomial {
  Path u;
  Path v;
  Scalar lambda;

  bool operator==(const Binomial&) const = default;
};

/// Bound quiver (Q, I) given by generators. Relations are kept in canonical
/// order: monomials sorted and deduplicated, binomials sorted by (u, v).
class Presentation {
 public:
  Presentation() = default;

  /// Validates relation generators: every path has length >= 2
  /// (RelationTooShort), binomial sides are distinct parallel paths
  /// (NotParallel), and lambda != 0 (ZeroScalar).
  static Presentation make(Quiver q, std::vector<Path> monomials, std::vector<Binomial> binomials);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Path>& monomials() const noexcept { return monomials_; }
  const std::vector<Binomial>& binomials() const noexcept { return binomials_; }

  std::size_t total_relation_length() const;

  bool operator==(const Presentation&) const = default;

 private:
  Quiver quiver_;
  std::vector<Path> monomials_;
  std::vector<Binomial> binomials_;
};

/// |Q1| - |Q0| + N.
std::int64_t euler_characteristic(const Quiver& q);

/// Freely cancels adjacent l l^-1 pairs until none remain.
Walk reduce_walk(const Quiver& q, const Walk& w);

std::string format_path(const Quiver& q, const Path& p);
std::string format_walk(const Quiver& q, const Walk& w);
std::string format_letter(const Quiver& q, Letter l);

}  // namespace qbsa
