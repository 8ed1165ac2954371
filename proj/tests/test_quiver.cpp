#include <doctest.h>

#include "qbsa/dsl.hpp"
#include "qbsa/error.hpp"
#include "qbsa/quiver.hpp"
#include "qbsa/scalar.hpp"
#include "support/instances.hpp"

using namespace qbsa;
using qbsa::testing::corpus;
using qbsa::testing::corpus_files;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("scalars parse and reduce") {
  CHECK(Scalar::parse("6/4") == Scalar(3, 2));
  CHECK(Scalar::parse("-2") == Scalar(-2));
  CHECK(Scalar(2, -4) == Scalar(-1, 2));
  CHECK_FALSE(Scalar::parse("1/0"));
  CHECK_FALSE(Scalar::parse("x"));
  CHECK(Scalar(3, 2).to_string() == "3/2");
}

TEST_CASE("scalar reduction modulo p") {
  CHECK(Scalar(2).nonzero_in(Characteristic(3)));
  CHECK_FALSE(Scalar(6).nonzero_in(Characteristic(3)));
  CHECK_FALSE(Scalar(1, 3).nonzero_in(Characteristic(3)));
  CHECK(Scalar(6).nonzero_in(Characteristic(0)));
}

TEST_CASE("characteristic must be zero or prime") {
  CHECK(Characteristic(7).value() == 7);
  CHECK(code_of([] { Characteristic(4); }) == ErrorCode::BadCharacteristic);
  CHECK(code_of([] { Characteristic(-2); }) == ErrorCode::BadCharacteristic);
  CHECK(code_of([] { Characteristic(1); }) == ErrorCode::BadCharacteristic);
}

TEST_CASE("quiver ids follow lexicographic order") {
  const Quiver q = Quiver::make({"b", "a"}, {{"y", "b", "a"}, {"x", "a", "b"}});
  CHECK(q.point_name(point_at(0)) == "a");
  CHECK(q.arrow(arrow_at(0)).name == "x");
  CHECK(q.source(arrow_at(1)) == point_at(1));
  CHECK(q.has_oriented_cycle());
  CHECK(q.num_components() == 1);
  CHECK(euler_characteristic(q) == 1);
}

TEST_CASE("quiver declaration errors") {
  CHECK(code_of([] { Quiver::make({"1", "1"}, {}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Quiver::make({"1"}, {{"a", "1", "2"}}); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([] { Quiver::make({"1"}, {{"a", "1", "1"}, {"a", "1", "1"}}); }) == ErrorCode::ParseError);
}

TEST_CASE("paths compose only end to start") {
  const Quiver q = Quiver::make({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  const Path ab = Path::of(q, {arrow_at(0), arrow_at(1)});
  CHECK(ab.source() == point_at(0));
  CHECK(ab.target() == point_at(2));
  CHECK(ab.slice(q, 1, 1) == Path::of(q, {arrow_at(1)}));
  CHECK(ab.slice(q, 1, 0).is_trivial());
  CHECK(code_of([&] { Path::of(q, {arrow_at(1), arrow_at(0)}); }) == ErrorCode::NonComposablePath);
  CHECK(format_path(q, ab) == "a b");
}

TEST_CASE("walk reduction cancels adjacent inverse pairs") {
  const Quiver q = Quiver::make({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
  const Walk w = Walk::of(q, {{arrow_at(0), false}, {arrow_at(1), true}, {arrow_at(1), false}, {arrow_at(0), true}});
  CHECK_FALSE(w.is_reduced());
  CHECK(reduce_walk(q, w).is_trivial());
  const Walk band = Walk::of(q, {{arrow_at(0), false}, {arrow_at(1), true}});
  CHECK(band.is_reduced());
  CHECK(band.is_closed());
  CHECK(format_walk(q, band) == "a b^-1");
  CHECK(band.inverse().inverse() == band);
}

TEST_CASE("presentation checks its generators") {
  const Quiver q = Quiver::make({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
  const Path a = Path::of(q, {arrow_at(0)});
  const Path ab = Path::of(q, {arrow_at(0), arrow_at(1)});
  const Path c = Path::of(q, {arrow_at(2)});
  CHECK(code_of([&] { Presentation::make(q, {a}, {}); }) == ErrorCode::RelationTooShort);
  CHECK(code_of([&] { Presentation::make(q, {}, {{ab, c, Scalar(1)}}); }) == ErrorCode::RelationTooShort);
  CHECK(code_of([&] { Presentation::make(q, {}, {{ab, ab, Scalar(1)}}); }) == ErrorCode::NotParallel);
}

TEST_CASE("dsl reports line and column") {
  try {
    parse_presentation("point 1 2\narrow a 1 -> 2\n");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(code_of([] { parse_presentation("point 1\narrow a : 1 -> 1\nzero a q\n"); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([] { parse_presentation("point 1\narrow a : 1 -> 1\ncomm a a = 0 * a a a\n"); }) ==
        ErrorCode::ZeroScalar);
}

TEST_CASE("dsl scalars and declaration order") {
  const Presentation p = parse_presentation(
      "comm a b = -3/2 * c d\n"
      "arrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n"
      "point 1 2 3 4\n");
  REQUIRE(p.binomials().size() == 1);
  CHECK(p.binomials()[0].lambda == Scalar(-3, 2));
}

TEST_CASE("serialize round-trips every corpus file") {
  for (const auto& f : corpus_files()) {
    CAPTURE(f);
    const Presentation p = load_presentation(f);
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("missing file is a parse error") {
  CHECK(code_of([] { load_presentation("/nonexistent/x.qbsa"); }) == ErrorCode::ParseError);
}

TEST_CASE("error messages carry stage tags") {
  const Error e(ErrorCode::NotClosed, "walk is open");
  const Error tagged = e.with_stage("homology");
  CHECK(tagged.stage() == "homology");
  CHECK(std::string(tagged.what()).find("NotClosed") != std::string::npos);
  CHECK(tagged.with_stage("verdict").stage() == "homology");
  CHECK(is_internal(ErrorCode::InequalityViolation));
  CHECK_FALSE(is_internal(ErrorCode::NotAdmissible));
}
