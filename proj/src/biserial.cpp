#include "qbsa/biserial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qbsa/error.hpp"

namespace qbsa {

namespace {

[[noreturn]] void not_sb(const std::string& condition, const std::string& witness) {
  fail(ErrorCode::NotSpecialBiserial, "condition " + condition + " violated: " + witness);
}

}  // namespace

class BiserialValidator {
 public:
  static ValidatedPresentation run(const Presentation& p, const ValidationOptions& options) {
    auto shared = std::make_shared<const Presentation>(p);
    IdealView iv(shared);
    const Quiver& q = shared->quiver();

    for (std::size_t i = 0; i < q.num_points(); ++i) {
      const PointId x = point_at(i);
      if (q.out_arrows(x).size() > 2)
        not_sb("(i)", "point '" + q.point_name(x) + "' is the source of " + std::to_string(q.out_arrows(x).size()) +
                          " arrows");
      if (q.in_arrows(x).size() > 2)
        not_sb("(i)", "point '" + q.point_name(x) + "' is the target of " + std::to_string(q.in_arrows(x).size()) +
                          " arrows");
    }

    for (const Arrow& a : q.arrows()) {
      const ArrowId id = *q.find_arrow(a.name);
      std::vector<std::string> after, before;
      for (ArrowId b : q.out_arrows(a.target))
        if (!iv.matches_subpath_rule(Path::of(q, {id, b}))) after.push_back(q.arrow(b).name);
      for (ArrowId c : q.in_arrows(a.source))
        if (!iv.matches_subpath_rule(Path::of(q, {c, id}))) before.push_back(q.arrow(c).name);
      if (after.size() > 1)
        not_sb("(ii)", "arrow '" + a.name + "' has nonzero continuations '" + after[0] + "' and '" + after[1] + "'");
      if (before.size() > 1)
        not_sb("(ii)", "arrow '" + a.name + "' has nonzero predecessors '" + before[0] + "' and '" + before[1] + "'");
    }

    const auto& paths = iv.binomial_paths();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const Path& p1 = paths[i];
      if (iv.matches_subpath_rule(p1))
        not_sb("binomial-nonzero", "binomial path '" + format_path(q, p1) + "' lies in I");
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        const Path& p2 = paths[j];
        if (p1 == p2) not_sb("binomial-distinct", "path '" + format_path(q, p1) + "' occurs in two binomials");
        if (p1[0] == p2[0])
          not_sb("binomial-prefix", "arrow '" + q.arrow(p1[0]).name + "' is a common prefix of '" +
                                        format_path(q, p1) + "' and '" + format_path(q, p2) + "'");
        if (p1.arrows().back() == p2.arrows().back())
          not_sb("binomial-suffix", "arrow '" + q.arrow(p1.arrows().back()).name + "' is a common suffix of '" +
                                        format_path(q, p1) + "' and '" + format_path(q, p2) + "'");
      }
    }
    const auto& binomials = shared->binomials();
    for (std::size_t i = 0; i < binomials.size(); ++i) {
      for (std::size_t j = i + 1; j < binomials.size(); ++j) {
        if (binomials[i].u.source() == binomials[j].u.source())
          not_sb("socle-endpoints", "two binomial relations start at '" +
                                        q.point_name(binomials[i].u.source()) + "'");
        if (binomials[i].u.target() == binomials[j].u.target())
          not_sb("socle-endpoints", "two binomial relations end at '" + q.point_name(binomials[i].u.target()) +
                                        "'");
      }
    }

    AdmissibilityCertificate cert = verify_admissible(iv, options.admissibility);
    iv.validated_ = true;
    return ValidatedPresentation(std::move(shared), std::move(iv), std::move(cert));
  }
};

ValidatedPresentation check_special_biserial(const Presentation& p, const ValidationOptions& options) {
  return BiserialValidator::run(p, options);
}

SocleData socle_relations(const ValidatedPresentation& vp) {
  SocleData out;
  out.relations = vp.presentation().binomials();
  out.dim = out.relations.size();
  return out;
}

StringQuotient string_quotient(const ValidatedPresentation& vp) {
  std::vector<Path> gens = vp.presentation().monomials();
  for (const Path& b : vp.ideal().binomial_paths()) gens.push_back(b);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Path> pruned;
  for (const Path& g : gens) {
    const bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Path& h) {
      return h.length() < g.length() && g.contains(h.arrows());
    });
    if (!redundant) pruned.push_back(g);
  }
  return {vp.quiver(), std::move(pruned)};
}

std::vector<Bypass> bypasses(const ValidatedPresentation& vp) {
  const Quiver& q = vp.quiver();
  const std::size_t limit = std::max(vp.max_nonzero_length(), q.num_points());
  std::vector<Bypass> out;

  // Depth-first over all paths from each source point, bounded by `limit`.
  for (std::size_t i = 0; i < q.num_points(); ++i) {
    const PointId x = point_at(i);
    if (q.out_arrows(x).empty()) continue;
    std::vector<ArrowId> stack;
    std::vector<std::size_t> choice{0};
    std::vector<PointId> at{x};
    while (!choice.empty()) {
      const auto outs = q.out_arrows(at.back());
      if (stack.size() >= limit || choice.back() >= outs.size()) {
        choice.pop_back();
        at.pop_back();
        if (!stack.empty()) stack.pop_back();
        continue;
      }
      const ArrowId next = outs[choice.back()++];
      stack.push_back(next);
      at.push_back(q.target(next));
      choice.push_back(0);
      for (ArrowId a : q.out_arrows(x)) {
        if (q.target(a) != at.back()) continue;
        if (stack.size() == 1 && stack.front() == a) continue;
        out.push_back({a, Path::of(q, stack)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Bypass& a, const Bypass& b) {
    if (a.arrow != b.arrow) return a.arrow < b.arrow;
    return a.path < b.path;
  });
  return out;
}

std::size_t basis_dimension(const ValidatedPresentation& vp, PointId x, PointId y) {
  std::size_t count = x == y ? 1 : 0;
  for (const Path& p : vp.nonzero_paths())
    if (p.source() == x && p.target() == y) ++count;
  for (const Binomial& b : vp.presentation().binomials())
    if (b.u.source() == x && b.u.target() == y) --count;
  return count;
}

bool is_constrained(const ValidatedPresentation& vp) {
  const Quiver& q = vp.quiver();
  for (const Arrow& a : q.arrows())
    if (basis_dimension(vp, a.source, a.target) > 1) return false;
  return true;
}

}  // namespace qbsa
