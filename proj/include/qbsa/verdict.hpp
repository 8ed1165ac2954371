#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/cycles.hpp"
#include "qbsa/fundamental_group.hpp"
#include "qbsa/homology.hpp"
#include "qbsa/scalar.hpp"
#include "qbsa/string_rep.hpp"

namespace qbsa {

struct AnalysisOptions {
  Characteristic characteristic;
  ValidationOptions validation;
};

struct Hh1Dimensions {
  std::size_t hh1 = 0;           // dim HH1(A)
  std::size_t hh1_quotient = 0;  // dim HH1(A/S)
  /// "theorem" for triangular input, "cited-literature" otherwise.
  std::string basis;
};

struct Withheld {
  std::string reason;
};

using Hh1Result = std::variant<Hh1Dimensions, Withheld>;

/// Withheld("bypass present") when Q has a bypass. Otherwise
/// (hom_additive_dim(pi1), chi(Q)), checked against the relator rank.
Hh1Result hh1_dimensions(const ValidatedPresentation& vp, Characteristic c);

/// The five equivalent conditions, all read off chi(Q) = dimS except
/// rep_finite, which comes from the band search.
struct Verdict {
  bool simply_connected = false;
  bool pi1_trivial = false;
  bool hh1_zero = false;
  bool all_hh_zero = false;
  bool rep_finite = false;
};

struct AnalysisReport {
  Presentation presentation;
  Characteristic characteristic;
  std::int64_t chi = 0;
  std::size_t dim_s = 0;
  bool triangular = false;
  std::vector<Bypass> bypasses;
  bool constrained = false;
  std::vector<RelationClass> relations;
  CycleGraph gamma;
  EulerReport euler;
  GroupPresentation pi1;
  AbelianInvariants abelian;
  std::size_t hom_additive_dim = 0;
  TriangularRank triangular_rank;
  Hh1Result hh1;
  RepFiniteVerdict bands;
  Verdict verdict;
};

/// Runs the whole pipeline. Errors are rethrown tagged with the stage that
/// raised them. Throws ZeroScalar when a binomial scalar vanishes in the
/// requested characteristic.
AnalysisReport analyze(const Presentation& p, const AnalysisOptions& options = {});

/// JSON with top-level keys quiver, chi, dim_s, triangular, bypasses,
/// constrained, euler_report, gamma, pi1, hh1, bands, verdict, in that order.
std::string report_json(const AnalysisReport& r, int indent = 2);

std::string report_text(const AnalysisReport& r);

}  // namespace qbsa
