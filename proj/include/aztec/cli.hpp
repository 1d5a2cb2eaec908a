#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aztec/condensation.hpp"
#include "aztec/errors.hpp"
#include "aztec/numeric.hpp"

namespace aztec {

// Region text:
//   ("AD" "n=" INT | "AR" "a=" INT "b=" INT) ["gamma=" INT["@" INT]]
//   ["remove=" SIDE ":" INT ("," SIDE ":" INT)*]
// gamma=K@S places K gamma squares starting at position S (default 1).
DefectConfiguration parse_region_spec(std::string_view text);
std::string format_region_spec(const DefectConfiguration& config);

enum class CountEngine { kDp, kBrute, kFormula, kPfaffian };

CountEngine parse_engine(std::string_view name);
std::string_view engine_name(CountEngine engine);

// Largest region the brute-force engine accepts; AZTEC_ORACLE_CELL_LIMIT or 36.
std::size_t oracle_cell_limit();

// Exact tiling count of the residual region. Throws Error; codes for which
// is_inapplicable() holds mean this engine cannot handle the configuration.
Integer count_configuration(const DefectConfiguration& config, CountEngine engine);

bool is_inapplicable(ErrorCode code);

// Checkerboard drawing: W/B cells, '-' removed defects, 'G' gamma squares.
std::string render_region(const DefectConfiguration& config);

struct VerifyOptions {
  int max_a = 3;
  int max_b = 5;
  std::uint32_t seed = 7;
  int trials = 100;
  // Use the printed variants (ar_k1_i expression, mt1 exponent).
  bool printed = false;
  // Corrupt one Pfaffian entry in the mt suite.
  bool inject_fault = false;
};

struct VerifyReport {
  std::string suite;
  long passed = 0;
  long failed = 0;
  std::string first_failure;
  std::vector<std::string> log;

  bool ok() const { return failed == 0; }
  void record(bool pass, const std::string& what);
};

// Suites: formulas, kuo, ciucu, mt.
VerifyReport run_verify(std::string_view suite, const VerifyOptions& options);

}  // namespace aztec
