#include "qbsa/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "qbsa/error.hpp"

namespace qbsa {

Quiver Quiver::make(std::vector<std::string> points, std::vector<ArrowSpec> arrows) {
  std::sort(points.begin(), points.end());
  if (auto dup = std::adjacent_find(points.begin(), points.end()); dup != points.end())
    fail(ErrorCode::ParseError, "duplicate point '" + *dup + "'");
  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (arrows[i].name == arrows[i - 1].name)
      fail(ErrorCode::ParseError, "duplicate arrow '" + arrows[i].name + "'");

  Quiver q;
  q.points_ = std::move(points);
  q.out_.resize(q.points_.size());
  q.in_.resize(q.points_.size());
  for (const auto& spec : arrows) {
    auto s = q.find_point(spec.source);
    auto t = q.find_point(spec.target);
    if (!s) fail(ErrorCode::UnknownSymbol, "arrow '" + spec.name + "' has undeclared source '" + spec.source + "'");
    if (!t) fail(ErrorCode::UnknownSymbol, "arrow '" + spec.name + "' has undeclared target '" + spec.target + "'");
    const ArrowId id = arrow_at(q.arrows_.size());
    q.arrows_.push_back({spec.name, *s, *t});
    q.out_[index(*s)].push_back(id);
    q.in_[index(*t)].push_back(id);
  }

  // Components of the underlying graph.
  std::vector<std::size_t> parent(q.points_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows_) parent[find(index(a.source))] = find(index(a.target));
  q.component_.assign(q.points_.size(), 0);
  std::vector<std::size_t> label(q.points_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < q.points_.size(); ++i) {
    const std::size_t r = find(i);
    if (label[r] == SIZE_MAX) label[r] = q.num_components_++;
    q.component_[i] = label[r];
  }
  return q;
}

std::optional<PointId> Quiver::find_point(std::string_view name) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), name);
  if (it == points_.end() || *it != name) return std::nullopt;
  return point_at(static_cast<std::size_t>(it - points_.begin()));
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, std::string_view n) { return a.name < n; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return arrow_at(static_cast<std::size_t>(it - arrows_.begin()));
}

bool Quiver::has_oriented_cycle() const {
  std::vector<std::size_t> indeg(points_.size(), 0);
  for (const auto& a : arrows_) ++indeg[index(a.target)];
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < indeg.size(); ++i)
    if (indeg[i] == 0) ready.push(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.front();
    ready.pop();
    ++seen;
    for (ArrowId a : out_[x])
      if (--indeg[index(target(a))] == 0) ready.push(index(target(a)));
  }
  return seen != points_.size();
}

bool Quiver::operator==(const Quiver& other) const {
  return points_ == other.points_ && arrows_ == other.arrows_;
}

// ---------------------------------------------------------------------------

Path Path::of(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) fail(ErrorCode::InvariantViolation, "Path::of needs at least one arrow");
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    if (q.target(arrows[i - 1]) != q.source(arrows[i]))
      fail(ErrorCode::NonComposablePath, "arrow '" + q.arrow(arrows[i - 1]).name + "' ends at '" +
                                             q.point_name(q.target(arrows[i - 1])) + "' but '" +
                                             q.arrow(arrows[i]).name + "' starts at '" +
                                             q.point_name(q.source(arrows[i])) + "'");
  }
  const PointId s = q.source(arrows.front());
  const PointId t = q.target(arrows.back());
  return Path(s, t, std::move(arrows));
}

std::vector<PointId> Path::points(const Quiver& q) const {
  std::vector<PointId> out;
  out.reserve(arrows_.size() + 1);
  out.push_back(source_);
  for (ArrowId a : arrows_) out.push_back(q.target(a));
  return out;
}

Path Path::slice(const Quiver& q, std::size_t pos, std::size_t len) const {
  if (len == 0) {
    const PointId at = pos == 0 ? source_ : q.target(arrows_[pos - 1]);
    return trivial(at);
  }
  return of(q, std::vector<ArrowId>(arrows_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    arrows_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Path Path::then(const Path& rhs) const {
  if (target_ != rhs.source_) fail(ErrorCode::NonComposablePath, "paths do not compose");
  std::vector<ArrowId> arrows = arrows_;
  arrows.insert(arrows.end(), rhs.arrows_.begin(), rhs.arrows_.end());
  return Path(source_, rhs.target_, std::move(arrows));
}

Path Path::power(std::size_t n) const {
  Path out = trivial(source_);
  for (std::size_t i = 0; i < n; ++i) out = out.then(*this);
  return out;
}

bool Path::contains(std::span<const ArrowId> pattern) const {
  if (pattern.empty()) return true;
  return std::search(arrows_.begin(), arrows_.end(), pattern.begin(), pattern.end()) != arrows_.end();
}

bool Path::starts_with(std::span<const ArrowId> prefix) const {
  return prefix.size() <= arrows_.size() && std::equal(prefix.begin(), prefix.end(), arrows_.begin());
}

bool Path::ends_with(std::span<const ArrowId> suffix) const {
  return suffix.size() <= arrows_.size() &&
         std::equal(suffix.begin(), suffix.end(), arrows_.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = std::lexicographical_compare_three_way(arrows_.begin(), arrows_.end(),
                                                      other.arrows_.begin(), other.arrows_.end());
      c != 0)
    return c;
  if (auto c = source_ <=> other.source_; c != 0) return c;
  return target_ <=> other.target_;
}

// ---------------------------------------------------------------------------

Walk Walk::of(const Path& p) {
  std::vector<Letter> letters;
  letters.reserve(p.length());
  for (ArrowId a : p.arrows()) letters.push_back({a, false});
  return Walk(p.source(), p.target(), std::move(letters));
}

Walk Walk::of(const Quiver& q, std::vector<Letter> letters) {
  if (letters.empty()) fail(ErrorCode::InvariantViolation, "Walk::of needs at least one letter");
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i - 1].target(q) != letters[i].source(q))
      fail(ErrorCode::NonComposablePath, "walk letters " + format_letter(q, letters[i - 1]) + " and " +
                                             format_letter(q, letters[i]) + " do not compose");
  const PointId s = letters.front().source(q);
  const PointId t = letters.back().target(q);
  return Walk(s, t, std::move(letters));
}

bool Walk::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverted()) return false;
  return true;
}

std::vector<PointId> Walk::points(const Quiver& q) const {
  std::vector<PointId> out;
  out.reserve(letters_.size() + 1);
  out.push_back(source_);
  for (const Letter& l : letters_) out.push_back(l.target(q));
  return out;
}

Walk Walk::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back(it->inverted());
  return Walk(target_, source_, std::move(letters));
}

Walk Walk::then(const Walk& rhs) const {
  if (target_ != rhs.source_) fail(ErrorCode::NonComposablePath, "walks do not compose");
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Walk(source_, rhs.target_, std::move(letters));
}

// ---------------------------------------------------------------------------

Presentation Presentation::make(Quiver q, std::vector<Path> monomials, std::vector<Binomial> binomials) {
  for (const Path& m : monomials)
    if (m.length() < 2)
      fail(ErrorCode::RelationTooShort, "monomial relation '" + format_path(q, m) + "' has length < 2");
  for (const Binomial& b : binomials) {
    for (const Path* side : {&b.u, &b.v})
      if (side->length() < 2)
        fail(ErrorCode::RelationTooShort, "binomial side '" + format_path(q, *side) + "' has length < 2");
    if (!b.u.is_parallel_to(b.v))
      fail(ErrorCode::NotParallel, "binomial sides '" + format_path(q, b.u) + "' and '" + format_path(q, b.v) +
                                       "' are not parallel");
    if (b.u == b.v) fail(ErrorCode::NotParallel, "binomial sides of '" + format_path(q, b.u) + "' coincide");
    if (b.lambda.is_zero()) fail(ErrorCode::ZeroScalar, "binomial '" + format_path(q, b.u) + "' has zero scalar");
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::sort(binomials.begin(), binomials.end(), [](const Binomial& a, const Binomial& b) {
    if (auto c = a.u <=> b.u; c != 0) return c < 0;
    return a.v < b.v;
  });

  Presentation p;
  p.quiver_ = std::move(q);
  p.monomials_ = std::move(monomials);
  p.binomials_ = std::move(binomials);
  return p;
}

std::size_t Presentation::total_relation_length() const {
  std::size_t total = 0;
  for (const Path& m : monomials_) total += m.length();
  for (const Binomial& b : binomials_) total += b.u.length() + b.v.length();
  return total;
}

// ---------------------------------------------------------------------------

std::int64_t euler_characteristic(const Quiver& q) {
  return static_cast<std::int64_t>(q.num_arrows()) - static_cast<std::int64_t>(q.num_points()) +
         static_cast<std::int64_t>(q.num_components());
}

Walk reduce_walk(const Quiver& q, const Walk& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverted())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  if (stack.empty()) return Walk::trivial(w.source());
  return Walk::of(q, std::move(stack));
}

std::string format_letter(const Quiver& q, Letter l) {
  std::string out = q.arrow(l.arrow).name;
  if (l.inverse) out += "^-1";
  return out;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.point_name(p.source());
  std::string out;
  for (ArrowId a : p.arrows()) {
    if (!out.empty()) out += ' ';
    out += q.arrow(a).name;
  }
  return out;
}

std::string format_walk(const Quiver& q, const Walk& w) {
  if (w.is_trivial()) return "e_" + q.point_name(w.source());
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(q, l);
  }
  return out;
}

}  // namespace qbsa
