// qbsa: command-line front end for the special biserial analyzer.
//
// Exit codes: 0 analysis complete, 1 invalid input, 2 internal invariant
// violation. QBSA_BOUND overrides the admissibility search bound.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbsa/cycles.hpp"
#include "qbsa/dsl.hpp"
#include "qbsa/error.hpp"
#include "qbsa/fundamental_group.hpp"
#include "qbsa/string_rep.hpp"
#include "qbsa/verdict.hpp"

namespace fs = std::filesystem;
using namespace qbsa;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInternal = 2;

ValidationOptions validation_from_env() {
  ValidationOptions opts;
  if (const char* env = std::getenv("QBSA_BOUND")) {
    const std::string s(env);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(ErrorCode::ParseError, "QBSA_BOUND must be a non-negative integer, got '" + s + "'");
    opts.admissibility.bound = std::stoull(s);
  }
  return opts;
}

int report(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return is_internal(e.code()) ? kInternal : kInvalid;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return report(e);
  } catch (const std::exception& e) {
    std::cerr << "error: InvariantViolation: " << e.what() << "\n";
    return kInternal;
  }
}

int cmd_check(const std::string& file) {
  const Presentation p = load_presentation(file);
  const ValidatedPresentation vp = check_special_biserial(p, validation_from_env());
  std::cout << "ok: special biserial, " << vp.quiver().num_points() << " points, " << vp.quiver().num_arrows()
            << " arrows, " << p.binomials().size() << " binomial relations, longest nonzero path "
            << vp.max_nonzero_length() << "\n";
  return kOk;
}

int cmd_analyze(const std::string& file, std::int64_t ch, const std::string& format) {
  AnalysisOptions opts;
  opts.characteristic = Characteristic(ch);
  opts.validation = validation_from_env();
  const AnalysisReport r = analyze(load_presentation(file), opts);
  std::cout << (format == "json" ? report_json(r) + "\n" : report_text(r));
  return kOk;
}

int cmd_gamma(const std::string& file, bool dot) {
  const ValidatedPresentation vp = check_special_biserial(load_presentation(file), validation_from_env());
  const CycleGraph g = build_cycle_graph(vp);
  if (dot) {
    std::cout << cycle_graph_to_dot(vp.quiver(), g);
  } else {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges, " << g.num_components
              << " components, chi = " << g.euler_characteristic() << "\n";
  }
  return kOk;
}

int cmd_pi1(const std::string& file) {
  const ValidatedPresentation vp = check_special_biserial(load_presentation(file), validation_from_env());
  const Quiver& q = vp.quiver();
  const GroupPresentation g = pi1_presentation(vp);
  const AbelianInvariants ab = abelianization(g);
  std::cout << format_group_presentation(q, g) << "\n";
  std::cout << "abelianization: free rank " << ab.free_rank;
  for (const BigInt& d : ab.torsion) std::cout << " + Z/" << d;
  std::cout << "\n";
  return kOk;
}

int cmd_bands(const std::string& file) {
  const ValidatedPresentation vp = check_special_biserial(load_presentation(file), validation_from_env());
  const RepFiniteVerdict v = rep_finite_verdict(vp);
  if (v.witness)
    std::cout << "band: " << format_walk(vp.quiver(), v.witness->word) << "\nrepresentation-infinite\n";
  else
    std::cout << "no band\nrepresentation-finite\n";
  return kOk;
}

int cmd_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".qbsa") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(ErrorCode::ParseError, "no .qbsa files in '" + dir + "'");

  AnalysisOptions opts;
  opts.validation = validation_from_env();
  int worst = kOk;
  for (const fs::path& f : files) {
    try {
      const AnalysisReport r = analyze(load_presentation(f), opts);
      const bool sc = r.verdict.simply_connected;
      std::cout << "ok      " << f.filename().string() << "  chi=" << r.chi << " dim_s=" << r.dim_s
                << " simply_connected=" << (sc ? "yes" : "no") << " rep_finite=" << (r.verdict.rep_finite ? "yes" : "no")
                << "\n";
    } catch (const Error& e) {
      const bool internal = is_internal(e.code());
      std::cout << (internal ? "FAIL    " : "invalid ") << f.filename().string() << "  " << e.what() << "\n";
      worst = std::max(worst, internal ? kInternal : kInvalid);
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple connectedness and Hochschild cohomology of special biserial algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string dir;
  std::int64_t ch = 0;
  std::string format = "json";
  bool dot = false;

  auto* check = app.add_subcommand("check", "Validate a presentation");
  check->add_option("file", file, "Presentation file")->required();

  auto* an = app.add_subcommand("analyze", "Full analysis report");
  an->add_option("file", file, "Presentation file")->required();
  an->add_option("--char", ch, "Field characteristic: 0 or a prime")->default_val(0);
  an->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");

  auto* gamma = app.add_subcommand("gamma", "Cycle graph of the binomial relations");
  gamma->add_option("file", file, "Presentation file")->required();
  gamma->add_flag("--dot", dot, "Emit DOT");

  auto* pi1 = app.add_subcommand("pi1", "Fundamental group presentation");
  pi1->add_option("file", file, "Presentation file")->required();

  auto* bands = app.add_subcommand("bands", "Band search on the string quotient");
  bands->add_option("file", file, "Presentation file")->required();

  auto* corpus = app.add_subcommand("corpus", "Analyze every .qbsa file in a directory");
  corpus->add_option("dir", dir, "Directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  return guarded([&] {
    if (*check) return cmd_check(file);
    if (*an) return cmd_analyze(file, ch, format);
    if (*gamma) return cmd_gamma(file, dot);
    if (*pi1) return cmd_pi1(file);
    if (*bands) return cmd_bands(file);
    return cmd_corpus(dir);
  });
}
