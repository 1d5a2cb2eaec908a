#include <cstdlib>
#include <string>

#include "aztec/cli.hpp"
#include "aztec/errors.hpp"
#include "doctest.h"

using namespace aztec;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_region_spec(text);
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::kInvalidParameter || e.code() == ErrorCode::kInvalidDefect));
    return e.what();
  }
  FAIL("expected a parse error for: " << text);
  return {};
}

Integer count(const std::string& spec, CountEngine engine) {
  return count_configuration(parse_region_spec(spec), engine);
}

ErrorCode count_error(const std::string& spec, CountEngine engine) {
  try {
    count(spec, engine);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for: " << spec);
  return ErrorCode::kInternalInconsistency;
}

}  // namespace

TEST_CASE("region spec parsing") {
  const DefectConfiguration ad = parse_region_spec("AD n=3");
  CHECK(ad.region.size() == 24);
  CHECK(ad.betas.empty());
  CHECK(ad.alphas.empty());

  const DefectConfiguration named = parse_region_spec("AR a=4 b=7 remove=SE:2,SE:4,SE:7");
  CHECK(named.region.meta().a == 4);
  CHECK(named.region.meta().b == 7);
  CHECK(named.betas.size() == 3);
  CHECK(named.betas[1] == boundary_defect(Side::kSE, 4));

  const DefectConfiguration aug = parse_region_spec("AR a=4 b=9 gamma=5 remove=SE:3,NE:1");
  CHECK(aug.region.size() == 90);
  CHECK(aug.region.meta().gamma_positions.size() == 5);
  CHECK(aug.betas.size() == 1);
  CHECK(aug.alphas.size() == 1);
  CHECK(format_region_spec(aug) == "AR a=4 b=9 gamma=5 remove=SE:3,NE:1");
  CHECK(format_region_spec(parse_region_spec(format_region_spec(aug))) == format_region_spec(aug));

  const DefectConfiguration shifted = parse_region_spec("AR a=2 b=5 gamma=2@2");
  CHECK(shifted.region.meta().gamma_positions == std::vector<int>{2, 3});
  CHECK(format_region_spec(shifted) == "AR a=2 b=5 gamma=2@2");
}

TEST_CASE("region spec errors name the token") {
  CHECK(parse_error("AX n=3").find("'AX'") != std::string::npos);
  CHECK(parse_error("AD n=x").find("column") != std::string::npos);
  CHECK(parse_error("AR a=3 b=2").find("invalid-parameter") != std::string::npos);
  CHECK(parse_error("AD n=2 remove=SE:9").find("SE:9") != std::string::npos);
  CHECK(parse_error("AD n=2 remove=SE:1,SE:1").find("SE:1") != std::string::npos);
  CHECK(parse_error("AD n=2 remove=UP:1").find("UP") != std::string::npos);
  CHECK(parse_error("ad n=2").find("'ad'") != std::string::npos);
  parse_error("AD n=2 trailing");
  parse_error("");
}

TEST_CASE("engines agree on the documented examples") {
  CHECK(count("AD n=4", CountEngine::kDp) == 1024);
  CHECK(count("AD n=4", CountEngine::kFormula) == 1024);
  CHECK(count("AD n=4", CountEngine::kPfaffian) == 1024);
  CHECK(count("AR a=2 b=3 remove=SE:2", CountEngine::kBrute) == 16);
  CHECK(count("AR a=2 b=3 remove=SE:2", CountEngine::kFormula) == 16);
  CHECK(count("AD n=2 remove=SE:2,NE:2", CountEngine::kPfaffian) == 6);
  CHECK(count("AD n=2 remove=SE:2,NE:2", CountEngine::kFormula) == 6);
  CHECK(count("AR a=2 b=3 remove=SE:1,SE:3", CountEngine::kDp) == 0);
  const std::string aug = "AR a=3 b=5 gamma=2 remove=SE:2,NE:1";
  CHECK(count(aug, CountEngine::kPfaffian) == count(aug, CountEngine::kDp));
  const std::string four = "AR a=2 b=3 remove=SE:1,SE:3,NW:2,NE:1,SW:2";
  CHECK(count(four, CountEngine::kPfaffian) == count(four, CountEngine::kBrute));
}

TEST_CASE("inapplicable engines") {
  CHECK(count_error("AR a=3 b=4 remove=SE:1,NW:1,NE:1,SW:1,SE:2", CountEngine::kFormula) ==
        ErrorCode::kUnsupportedRegion);
  CHECK(count_error("AD n=6", CountEngine::kBrute) == ErrorCode::kUnsupportedRegion);
  CHECK(is_inapplicable(ErrorCode::kUnsupportedRegion));
  CHECK_FALSE(is_inapplicable(ErrorCode::kInvalidParameter));
  CHECK(oracle_cell_limit() == 36);
}

TEST_CASE("engine names") {
  for (const char* name : {"dp", "brute", "formula", "pfaffian"}) {
    CHECK(engine_name(parse_engine(name)) == name);
  }
  CHECK_THROWS_AS(parse_engine("magic"), Error);
}

TEST_CASE("rendering") {
  CHECK(render_region(parse_region_spec("AD n=1")) == "WB\nBW\n");
  const std::string defected = render_region(parse_region_spec("AD n=2 remove=SE:2,NE:2"));
  CHECK(std::count(defected.begin(), defected.end(), '-') == 2);
  const std::string bumps = render_region(parse_region_spec("AR a=4 b=9 gamma=5"));
  CHECK(std::count(bumps.begin(), bumps.end(), 'G') == 5);
}

TEST_CASE("verify suites") {
  VerifyOptions small;
  small.max_a = 2;
  small.max_b = 4;
  small.trials = 10;
  for (const char* suite : {"formulas", "kuo", "ciucu", "mt"}) {
    const VerifyReport report = run_verify(suite, small);
    CHECK_MESSAGE(report.ok(), suite << ": " << report.first_failure);
    CHECK(report.passed > 0);
  }
  VerifyOptions printed = small;
  printed.printed = true;
  CHECK_FALSE(run_verify("formulas", printed).ok());
  VerifyOptions fault = small;
  fault.inject_fault = true;
  CHECK_FALSE(run_verify("mt", fault).ok());
  CHECK_THROWS_AS(run_verify("nonsense", small), Error);

  const VerifyReport first = run_verify("kuo", small);
  const VerifyReport second = run_verify("kuo", small);
  CHECK(first.log == second.log);
  CHECK(first.passed == second.passed);
}
