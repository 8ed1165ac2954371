#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qbsa/biserial.hpp"
#include "qbsa/dsl.hpp"
#include "qbsa/quiver.hpp"

namespace qbsa::testing {

inline std::filesystem::path corpus_dir() { return QBSA_CORPUS_DIR; }

/// Loads corpus/<name>.qbsa.
inline Presentation corpus(const std::string& name) { return load_presentation(corpus_dir() / (name + ".qbsa")); }

inline ValidatedPresentation validated(const std::string& name) { return check_special_biserial(corpus(name)); }

inline ValidatedPresentation validated_text(std::string_view text) {
  return check_special_biserial(parse_presentation(text));
}

std::vector<std::filesystem::path> corpus_files();

/// Path by arrow names, e.g. path(q, "a b c").
Path path(const Quiver& q, std::string_view arrows);

/// Walk by letters, e.g. walk(q, "a b^-1").
Walk walk(const Quiver& q, std::string_view letters);

/// Linear A_n, arrows a1..a{n-1} oriented 1 -> n.
std::string linear_text(int n, const std::vector<std::vector<int>>& zero_runs);

}  // namespace qbsa::testing
