#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qbsa/quiver.hpp"

namespace qbsa {

/// Read-only view of the ideal I generated by a presentation's relations.
///
/// Membership uses the subpath rule: a path lies in I iff it contains a
/// monomial generator, or strictly contains a path occurring in a binomial
/// relation. The rule is exact only for special biserial presentations, so
/// path_in_ideal() refuses views that check_special_biserial() has not
/// produced.
class IdealView {
 public:
  explicit IdealView(std::shared_ptr<const Presentation> presentation);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const Quiver& quiver() const noexcept { return presentation_->quiver(); }

  const std::vector<Path>& monomials() const noexcept { return presentation_->monomials(); }
  /// Every u and v of every binomial relation, in relation order (u then v).
  const std::vector<Path>& binomial_paths() const noexcept { return binomial_paths_; }

  /// The unique arrow b with a·b outside I, if exactly one exists.
  std::optional<ArrowId> forward_continuation(ArrowId a) const { return forward_[index(a)]; }

  bool validated() const noexcept { return validated_; }

  /// The subpath rule with no validation guard. Used while validating.
  bool matches_subpath_rule(const Path& p) const;

  /// True if p equals some u or v of a binomial relation.
  bool is_binomial_path(const Path& p) const;

 private:
  friend class BiserialValidator;

  std::shared_ptr<const Presentation> presentation_;
  std::vector<Path> binomial_paths_;
  std::vector<std::optional<ArrowId>> forward_;
  bool validated_ = false;
};

/// Throws NotValidated unless `iv` came out of check_special_biserial().
bool path_in_ideal(const IdealView& iv, const Path& p);

struct AdmissibilityOptions {
  /// Longest nonzero path allowed before the ideal is declared not
  /// admissible. Defaults to default_admissibility_bound().
  std::optional<std::size_t> bound;
  /// Cap on the number of paths alive at one length (SearchLimit).
  std::size_t frontier_limit = 1u << 20;
};

struct AdmissibilityCertificate {
  /// Every path of length >= m = max_nonzero_length + 1 lies in I.
  std::size_t max_nonzero_length = 0;
  std::size_t bound = 0;
  /// All nontrivial paths outside I, by increasing length.
  std::vector<Path> nonzero_paths;
};

/// |Q1| * (1 + total length of all relation generators).
std::size_t default_admissibility_bound(const Presentation& p);

/// Breadth-first enumeration of nonzero paths. Throws NotAdmissible when a
/// nonzero path longer than the bound exists, SearchLimit when the frontier
/// outgrows the cap.
AdmissibilityCertificate verify_admissible(const IdealView& iv, const AdmissibilityOptions& options = {});

}  // namespace qbsa
