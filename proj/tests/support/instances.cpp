#include "support/instances.hpp"

#include <algorithm>
#include <sstream>

namespace qbsa::testing {

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".qbsa") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Path path(const Quiver& q, std::string_view arrows) {
  std::istringstream in{std::string(arrows)};
  std::vector<ArrowId> ids;
  for (std::string name; in >> name;) ids.push_back(*q.find_arrow(name));
  return Path::of(q, ids);
}

Walk walk(const Quiver& q, std::string_view letters) {
  std::istringstream in{std::string(letters)};
  std::vector<Letter> out;
  for (std::string tok; in >> tok;) {
    const bool inv = tok.size() > 3 && tok.ends_with("^-1");
    if (inv) tok.resize(tok.size() - 3);
    out.push_back({*q.find_arrow(tok), inv});
  }
  return Walk::of(q, out);
}

std::string linear_text(int n, const std::vector<std::vector<int>>& zero_runs) {
  std::ostringstream os;
  os << "point";
  for (int i = 1; i <= n; ++i) os << ' ' << i;
  os << '\n';
  for (int i = 1; i < n; ++i) os << "arrow a" << i << " : " << i << " -> " << i + 1 << '\n';
  for (const auto& run : zero_runs) {
    os << "zero";
    for (int i : run) os << " a" << i;
    os << '\n';
  }
  return os.str();
}

}  // namespace qbsa::testing
