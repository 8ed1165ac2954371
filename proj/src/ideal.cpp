#include "qbsa/ideal.hpp"

#include <algorithm>

#include "qbsa/error.hpp"

namespace qbsa {

IdealView::IdealView(std::shared_ptr<const Presentation> presentation)
    : presentation_(std::move(presentation)) {
  for (const Binomial& b : presentation_->binomials()) {
    binomial_paths_.push_back(b.u);
    binomial_paths_.push_back(b.v);
  }
  const Quiver& q = presentation_->quiver();
  forward_.assign(q.num_arrows(), std::nullopt);
  for (std::size_t i = 0; i < q.num_arrows(); ++i) {
    const ArrowId a = arrow_at(i);
    std::optional<ArrowId> only;
    std::size_t count = 0;
    for (ArrowId b : q.out_arrows(q.target(a))) {
      if (!matches_subpath_rule(Path::of(q, {a, b}))) {
        only = b;
        ++count;
      }
    }
    if (count == 1) forward_[i] = only;
  }
}

bool IdealView::matches_subpath_rule(const Path& p) const {
  for (const Path& m : presentation_->monomials())
    if (p.contains(m.arrows())) return true;
  for (const Path& b : binomial_paths_)
    if (p.length() > b.length() && p.contains(b.arrows())) return true;
  return false;
}

bool IdealView::is_binomial_path(const Path& p) const {
  return std::find(binomial_paths_.begin(), binomial_paths_.end(), p) != binomial_paths_.end();
}

bool path_in_ideal(const IdealView& iv, const Path& p) {
  if (!iv.validated())
    fail(ErrorCode::NotValidated, "path membership requires a presentation that passed check_special_biserial");
  return iv.matches_subpath_rule(p);
}

std::size_t default_admissibility_bound(const Presentation& p) {
  return p.quiver().num_arrows() * (1 + p.total_relation_length());
}

AdmissibilityCertificate verify_admissible(const IdealView& iv, const AdmissibilityOptions& options) {
  const Quiver& q = iv.quiver();
  AdmissibilityCertificate cert;
  cert.bound = options.bound.value_or(default_admissibility_bound(iv.presentation()));

  std::vector<Path> frontier;
  for (std::size_t i = 0; i < q.num_arrows(); ++i) frontier.push_back(Path::of(q, {arrow_at(i)}));

  std::size_t length = 1;
  while (!frontier.empty()) {
    if (length > cert.bound)
      fail(ErrorCode::NotAdmissible, "nonzero path '" + format_path(q, frontier.front()) + "' of length " +
                                         std::to_string(length) + " exceeds the bound " +
                                         std::to_string(cert.bound) + " (unbounded nonzero cycle)");
    if (frontier.size() > options.frontier_limit)
      fail(ErrorCode::SearchLimit, std::to_string(frontier.size()) + " nonzero paths of length " +
                                       std::to_string(length) + " exceed the enumeration limit");
    cert.max_nonzero_length = length;
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId b : q.out_arrows(p.target())) {
        Path ext = p.then(Path::of(q, {b}));
        if (!iv.matches_subpath_rule(ext)) next.push_back(std::move(ext));
      }
    }
    for (Path& p : frontier) cert.nonzero_paths.push_back(std::move(p));
    frontier = std::move(next);
    ++length;
  }
  return cert;
}

}  // namespace qbsa
