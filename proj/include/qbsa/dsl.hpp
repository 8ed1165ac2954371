#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qbsa/quiver.hpp"

namespace qbsa {

// Line-oriented input format, `#` starts a comment:
//
//   point <id> [<id> ...]
//   arrow <id> : <point> -> <point>
//   zero <arrow> <arrow> ...
//   comm <path> = [<scalar> *] <path>
//
// Paths are arrows composed left to right. A `comm` line stands for the
// binomial u - lambda v; the scalar is a nonzero rational, default 1.
// Declarations may appear in any order. Errors carry "line L, column C".

Presentation parse_presentation(std::string_view text);

/// Canonical text: one `point` line, arrows, monomials, then binomials, all in
/// canonical order. parse_presentation(serialize(p)) == p.
std::string serialize(const Presentation& p);

/// Reads and parses a file. I/O failures are reported as ParseError.
Presentation load_presentation(const std::filesystem::path& file);

}  // namespace qbsa
