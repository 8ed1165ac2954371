#include "qbsa/verdict.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "qbsa/error.hpp"
#include "qbsa/linalg.hpp"

namespace qbsa {

namespace {

template <class F>
auto run_stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw e.with_stage(name);
  }
}

std::string relation_text(const Quiver& q, const Binomial& b) {
  std::string s = format_path(q, b.u) + " = ";
  if (!b.lambda.is_one()) s += b.lambda.to_string() + " * ";
  return s + format_path(q, b.v);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvariantViolation, what);
}

}  // namespace

Hh1Result hh1_dimensions(const ValidatedPresentation& vp, Characteristic c) {
  if (!bypasses(vp).empty()) return Withheld{"bypass present"};
  const Quiver& q = vp.quiver();
  const GroupPresentation g = pi1_presentation(vp);
  Hh1Dimensions d;
  d.hh1_quotient = static_cast<std::size_t>(euler_characteristic(q));
  d.hh1 = hom_additive_dim(g, c);
  const std::size_t rank = matrix_rank(relator_matrix(g), c);
  require(d.hh1_quotient - d.hh1 == rank, "HH1 dimensions disagree with the relator rank");
  const bool triangular = !q.has_oriented_cycle();
  if (triangular && c.is_zero())
    require(rank == vp.presentation().binomials().size(), "exact sequence count differs from dimS");
  d.basis = triangular ? "theorem" : "cited-literature";
  return d;
}

AnalysisReport analyze(const Presentation& p, const AnalysisOptions& options) {
  AnalysisReport r;
  r.presentation = p;
  r.characteristic = options.characteristic;
  const Quiver& q = p.quiver();

  for (const Binomial& b : p.binomials())
    if (!b.lambda.nonzero_in(options.characteristic))
      throw Error(ErrorCode::ZeroScalar,
                  "scalar " + b.lambda.to_string() + " of '" + relation_text(q, b) + "' vanishes in characteristic " +
                      std::to_string(options.characteristic.value()),
                  "validate");

  const ValidatedPresentation vp = run_stage("validate", [&] { return check_special_biserial(p, options.validation); });

  r.chi = euler_characteristic(q);
  r.dim_s = p.binomials().size();
  r.triangular = !q.has_oriented_cycle();
  run_stage("biserial-structure", [&] {
    r.bypasses = bypasses(vp);
    r.constrained = is_constrained(vp);
    return 0;
  });
  run_stage("cycle-analysis", [&] {
    r.relations = classify_relations(vp);
    r.gamma = build_cycle_graph(vp, r.relations);
    return 0;
  });
  r.euler = run_stage("homology", [&] { return euler_report(vp, r.relations, r.gamma); });
  run_stage("fundamental-group", [&] {
    r.pi1 = pi1_presentation(vp);
    r.abelian = abelianization(r.pi1);
    r.hom_additive_dim = hom_additive_dim(r.pi1, options.characteristic);
    r.triangular_rank = triangular_free_rank(vp);
    return 0;
  });
  r.bands = run_stage("string-rep", [&] { return rep_finite_verdict(vp); });

  run_stage("verdict", [&] {
    r.hh1 = hh1_dimensions(vp, options.characteristic);
    const bool sc = r.chi == static_cast<std::int64_t>(r.dim_s);
    r.verdict = {sc, sc, sc, sc, r.bands.rep_finite};

    require(r.pi1.relators.size() == r.dim_s, "pi1 relator count differs from dimS");
    if (const auto* rank = std::get_if<std::int64_t>(&r.triangular_rank)) {
      require(r.abelian.torsion.empty(), "triangular pi1 abelianization has torsion");
      require(static_cast<std::int64_t>(r.abelian.free_rank) == *rank,
              "triangular free rank differs from the abelianization rank");
      if (options.characteristic.is_zero())
        require(static_cast<std::int64_t>(r.hom_additive_dim) == *rank,
                "triangular free rank differs from hom_additive_dim");
    }
    if (sc) {
      require(r.triangular, "chi(Q) = dimS but Q has an oriented cycle");
      require(r.bypasses.empty(), "chi(Q) = dimS but Q has a bypass");
      require(r.bands.rep_finite, "chi(Q) = dimS but a band exists");
      require(r.gamma.vertices.empty() && r.gamma.edges.empty(), "chi(Q) = dimS but the cycle graph is not empty");
      require(r.euler.r1 == 0, "chi(Q) = dimS but R1 is not empty");
      require(r.abelian.is_trivial(), "chi(Q) = dimS but the abelianized pi1 is not trivial");
      require(r.hom_additive_dim == 0, "chi(Q) = dimS but hom_additive_dim is not 0");
      const auto& paths = vp.nonzero_paths();
      for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
          if (!paths[i].is_parallel_to(paths[j])) continue;
          const bool bound = std::any_of(p.binomials().begin(), p.binomials().end(), [&](const Binomial& b) {
            return (b.u == paths[i] && b.v == paths[j]) || (b.u == paths[j] && b.v == paths[i]);
          });
          require(bound, "chi(Q) = dimS but parallel paths '" + format_path(q, paths[i]) + "' and '" +
                             format_path(q, paths[j]) + "' are not proportional");
        }
    }
    return 0;
  });
  return r;
}

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json quiver_json(const Presentation& p) {
  const Quiver& q = p.quiver();
  Json j;
  j["points"] = q.point_names();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"source", q.point_name(a.source)}, {"target", q.point_name(a.target)}});
  j["arrows"] = arrows;
  Json zeros = Json::array();
  for (const Path& m : p.monomials()) zeros.push_back(format_path(q, m));
  j["monomials"] = zeros;
  Json bins = Json::array();
  for (const Binomial& b : p.binomials())
    bins.push_back({{"u", format_path(q, b.u)}, {"v", format_path(q, b.v)}, {"lambda", b.lambda.to_string()}});
  j["binomials"] = bins;
  j["components"] = q.num_components();
  return j;
}

}  // namespace

std::string report_json(const AnalysisReport& r, int indent) {
  const Quiver& q = r.presentation.quiver();
  Json j;
  j["quiver"] = quiver_json(r.presentation);
  j["chi"] = r.chi;
  j["dim_s"] = r.dim_s;
  j["triangular"] = r.triangular;

  Json byp = Json::array();
  for (const Bypass& b : r.bypasses)
    byp.push_back({{"arrow", q.arrow(b.arrow).name}, {"path", format_path(q, b.path)}});
  j["bypasses"] = {{"count", r.bypasses.size()}, {"items", byp}};
  j["constrained"] = r.constrained;

  const EulerReport& e = r.euler;
  j["euler_report"] = {{"dim_s", e.dim_s},
                       {"r1", e.r1},
                       {"r2", e.r2},
                       {"degenerate", e.degenerate},
                       {"gamma0", e.gamma0},
                       {"gamma1", e.gamma1},
                       {"gamma_components", e.gamma_components},
                       {"chi_gamma", e.chi_gamma},
                       {"rk_c0", e.rk_c0},
                       {"rk_c1", e.rk_c1},
                       {"rk_c2", e.rk_c2},
                       {"rk_total", e.rk_total},
                       {"chi_q", e.chi_q},
                       {"equality", e.equality},
                       {"acyclic", e.acyclic}};

  Json verts = Json::array();
  for (const CycleClass& c : r.gamma.vertices) verts.push_back(format_path(q, c.representative));
  Json edges = Json::array();
  for (const GammaEdge& ge : r.gamma.edges)
    edges.push_back({{"from", ge.from},
                     {"to", ge.to},
                     {"relation", ge.relation},
                     {"type", std::string(to_string(ge.type))},
                     {"label", ge.label}});
  Json rels = Json::array();
  for (const RelationClass& c : r.relations)
    rels.push_back({{"relation", relation_text(q, r.presentation.binomials()[c.relation])},
                    {"type", std::string(to_string(c.type()))}});
  Json comp_types = Json::array();
  for (const auto& t : r.gamma.component_type) comp_types.push_back(t ? Json(std::string(to_string(*t))) : Json());
  j["gamma"] = {{"vertices", verts},
                {"edges", edges},
                {"components", r.gamma.num_components},
                {"component_types", comp_types},
                {"euler_characteristic", r.gamma.euler_characteristic()},
                {"relations", rels},
                {"degenerate", r.gamma.degenerate}};

  Json gens = Json::array();
  for (ArrowId a : r.pi1.generators) gens.push_back(q.arrow(a).name);
  Json relators = Json::array();
  for (const GroupWord& w : r.pi1.relators) relators.push_back(format_group_word(q, r.pi1, w));
  Json factors = Json::array(), torsion = Json::array();
  for (const BigInt& d : r.abelian.invariant_factors) factors.push_back(big(d));
  for (const BigInt& d : r.abelian.torsion) torsion.push_back(big(d));
  Json tri;
  if (const auto* rank = std::get_if<std::int64_t>(&r.triangular_rank)) tri = *rank;
  j["pi1"] = {{"presentation", format_group_presentation(q, r.pi1)},
              {"generators", gens},
              {"relators", relators},
              {"invariant_factors", factors},
              {"free_rank", r.abelian.free_rank},
              {"torsion", torsion},
              {"trivial", r.abelian.is_trivial()},
              {"characteristic", r.characteristic.value()},
              {"hom_additive_dim", r.hom_additive_dim},
              {"triangular_free_rank", tri}};

  if (const auto* d = std::get_if<Hh1Dimensions>(&r.hh1))
    j["hh1"] = {{"status", "available"},
                {"hh1_dim", d->hh1},
                {"hh1_quotient_dim", d->hh1_quotient},
                {"basis", d->basis},
                {"characteristic", r.characteristic.value()}};
  else
    j["hh1"] = {{"status", "withheld"}, {"reason", std::get<Withheld>(r.hh1).reason}};

  Json band;
  if (r.bands.witness) band = format_walk(q, r.bands.witness->word);
  j["bands"] = {{"band", band}, {"rep_finite", r.bands.rep_finite}};

  j["verdict"] = {{"simply_connected", r.verdict.simply_connected},
                  {"pi1_trivial", r.verdict.pi1_trivial},
                  {"hh1_zero", r.verdict.hh1_zero},
                  {"all_hh_zero", r.verdict.all_hh_zero},
                  {"rep_finite", r.verdict.rep_finite}};
  return j.dump(indent);
}

std::string report_text(const AnalysisReport& r) {
  const Quiver& q = r.presentation.quiver();
  std::ostringstream os;
  os << "points " << q.num_points() << ", arrows " << q.num_arrows() << ", components " << q.num_components()
     << "\n";
  os << "chi(Q) = " << r.chi << ", dimS = " << r.dim_s << "\n";
  os << "triangular: " << (r.triangular ? "yes" : "no") << "\n";
  os << "bypasses: " << r.bypasses.size();
  if (!r.bypasses.empty())
    os << " (first: " << q.arrow(r.bypasses.front().arrow).name << " ~ " << format_path(q, r.bypasses.front().path)
       << ")";
  os << "\n";
  os << "constrained: " << (r.constrained ? "yes" : "no") << "\n";
  for (const RelationClass& c : r.relations)
    os << "  " << relation_text(q, r.presentation.binomials()[c.relation]) << "  [" << to_string(c.type()) << "]\n";
  const EulerReport& e = r.euler;
  os << "R1 = " << e.r1 << " (degenerate " << e.degenerate << "), R2 = " << e.r2 << "\n";
  os << "Gamma: " << e.gamma0 << " vertices, " << e.gamma1 << " edges, " << e.gamma_components
     << " components, chi = " << e.chi_gamma << "\n";
  os << "ranks: C0 " << e.rk_c0 << ", C1 " << e.rk_c1 << ", C2 " << e.rk_c2 << ", total " << e.rk_total << "\n";
  os << "pi1 = " << format_group_presentation(q, r.pi1) << "\n";
  os << "abelianization: free rank " << r.abelian.free_rank;
  if (!r.abelian.torsion.empty()) {
    os << ", torsion";
    for (const BigInt& d : r.abelian.torsion) os << " Z/" << d;
  }
  os << "\n";
  os << "dim Hom(pi1, k+) = " << r.hom_additive_dim << " (characteristic " << r.characteristic.value() << ")\n";
  if (const auto* d = std::get_if<Hh1Dimensions>(&r.hh1))
    os << "dim HH1(A) = " << d->hh1 << ", dim HH1(A/S) = " << d->hh1_quotient << " [" << d->basis << "]\n";
  else
    os << "HH1 dimensions withheld: " << std::get<Withheld>(r.hh1).reason << "\n";
  os << "band: " << (r.bands.witness ? format_walk(q, r.bands.witness->word) : std::string("none")) << "\n";
  os << "simply connected: " << (r.verdict.simply_connected ? "yes" : "no")
     << " (pi1 trivial, HH1 = 0, HH^j = 0 for all j >= 1: " << (r.verdict.hh1_zero ? "yes" : "no") << ")\n";
  os << "representation-finite: " << (r.verdict.rep_finite ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace qbsa
