#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qbsa/ideal.hpp"
#include "qbsa/quiver.hpp"

namespace qbsa {

struct ValidationOptions {
  AdmissibilityOptions admissibility;
};

/// A presentation that passed check_special_biserial(), together with its
/// validated ideal view and admissibility certificate.
class ValidatedPresentation {
 public:
  const Presentation& presentation() const noexcept { return *presentation_; }
  const Quiver& quiver() const noexcept { return presentation_->quiver(); }
  const IdealView& ideal() const noexcept { return ideal_; }
  const AdmissibilityCertificate& admissibility() const noexcept { return certificate_; }
  std::size_t max_nonzero_length() const noexcept { return certificate_.max_nonzero_length; }
  const std::vector<Path>& nonzero_paths() const noexcept { return certificate_.nonzero_paths; }

 private:
  friend class BiserialValidator;
  ValidatedPresentation(std::shared_ptr<const Presentation> p, IdealView iv, AdmissibilityCertificate cert)
      : presentation_(std::move(p)), ideal_(std::move(iv)), certificate_(std::move(cert)) {}

  std::shared_ptr<const Presentation> presentation_;
  IdealView ideal_;
  AdmissibilityCertificate certificate_;
};

/// Checks, in order: (i) in- and out-degrees at most 2; (ii) every arrow has
/// at most one nonzero continuation on each side; the binomial paths are
/// pairwise distinct, lie outside I, and no nontrivial path is a prefix or a
/// suffix of two of them; distinct binomials have distinct start and end
/// points; finally the ideal is admissible. Throws NotSpecialBiserial naming
/// the violated condition and a witness, or NotAdmissible.
ValidatedPresentation check_special_biserial(const Presentation& p, const ValidationOptions& options = {});

struct SocleData {
  std::vector<Binomial> relations;
  std::size_t dim = 0;
};

SocleData socle_relations(const ValidatedPresentation& vp);

/// Monomial presentation of A/S.
struct StringQuotient {
  Quiver quiver;
  /// Generators of J, sorted, none containing another.
  std::vector<Path> generators;
};

StringQuotient string_quotient(const ValidatedPresentation& vp);

struct Bypass {
  ArrowId arrow;
  Path path;

  bool operator==(const Bypass&) const = default;
};

/// All (arrow, parallel path) pairs with the path different from the arrow,
/// over paths of length <= max(max nonzero length, |Q0|), whether or not
/// they lie in I.
std::vector<Bypass> bypasses(const ValidatedPresentation& vp);

/// dim e_x A e_y, counting nonzero paths from x to y with u and v of each
/// binomial identified (and e_x itself when x == y).
std::size_t basis_dimension(const ValidatedPresentation& vp, PointId x, PointId y);

/// Every arrow x -> y has dim e_x A e_y <= 1.
bool is_constrained(const ValidatedPresentation& vp);

}  // namespace qbsa
