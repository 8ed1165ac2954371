// Claim under test: for a type 3 relation a^n = lambda b^m at x, the last
// arrow of a followed by the first of b lies in I, and likewise with a and b
// exchanged. corpus/type3_one_one.qbsa is a counterexample with n = m = 1.

#include <doctest.h>

#include "qbsa/cycles.hpp"
#include "qbsa/dsl.hpp"
#include "support/generator.hpp"
#include "support/instances.hpp"

using namespace qbsa;

namespace {

void check_sides(const ValidatedPresentation& vp, const std::string& label) {
  const Quiver& q = vp.quiver();
  for (const auto& c : classify_relations(vp)) {
    const auto* s = std::get_if<shape::Type3>(&c.shape);
    if (!s) continue;
    const Path ab = Path::of(q, {s->a.arrows().back(), s->b[0]});
    const Path ba = Path::of(q, {s->b.arrows().back(), s->a[0]});
    CAPTURE(label);
    CAPTURE(serialize(vp.presentation()));
    CHECK(path_in_ideal(vp.ideal(), ab));
    CHECK(path_in_ideal(vp.ideal(), ba));
  }
}

}  // namespace

TEST_CASE("corpus") {
  for (const auto& f : qbsa::testing::corpus_files()) check_sides(check_special_biserial(load_presentation(f)), f.stem());
}

TEST_CASE("random family") {
  for (const auto& p : qbsa::testing::random_family(7u, 600)) check_sides(check_special_biserial(p), "random");
}

TEST_CASE("holds when both exponents are at least two") {
  const auto vp = qbsa::testing::validated("two_loops");
  check_sides(vp, "two_loops");
}
