// aztec: count, cross-check and draw defected Aztec regions.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aztec/cli.hpp"
#include "json.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitMismatch = 3;

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

int exit_for(const aztec::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (aztec::is_inapplicable(e.code())) return kExitInapplicable;
  if (e.code() == aztec::ErrorCode::kInternalInconsistency) return kExitMismatch;
  return kExitUsage;
}

int run_count(const std::string& spec, const std::string& engine_text, const std::string& format) {
  const aztec::CountEngine engine = aztec::parse_engine(engine_text);
  const aztec::DefectConfiguration config = aztec::parse_region_spec(spec);
  const auto start = std::chrono::steady_clock::now();
  const aztec::Integer count = aztec::count_configuration(config, engine);
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (format == "json") {
    nlohmann::json out = {{"region", aztec::format_region_spec(config)},
                          {"engine", std::string(aztec::engine_name(engine))},
                          {"count", count.get_str()},
                          {"millis", millis}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << count.get_str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const aztec::VerifyOptions& options) {
  const aztec::VerifyReport report = aztec::run_verify(suite, options);
  std::cout << "suite " << report.suite << ": " << report.passed << " passed, " << report.failed
            << " failed\n";
  if (!report.ok()) {
    std::cout << "first counterexample: " << report.first_failure << "\n";
    for (std::size_t i = 1; i < report.log.size(); ++i) std::cout << "  " << report.log[i] << "\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domino tiling counts for Aztec diamonds and rectangles with defects"};
  app.require_subcommand(1);

  std::vector<std::string> spec_words;
  std::string engine = "dp";
  std::string format = "dec";
  auto* count = app.add_subcommand("count", "Count tilings of a region");
  count->add_option("spec", spec_words, "Region, e.g. \"AR a=2 b=3 remove=SE:2\"")->required();
  count->add_option("-e,--engine", engine, "dp, brute, formula or pfaffian")
      ->check(CLI::IsMember({"dp", "brute", "formula", "pfaffian"}));
  count->add_option("-f,--format", format, "dec or json")->check(CLI::IsMember({"dec", "json"}));

  std::string suite;
  aztec::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run a cross-check suite");
  verify->add_option("suite", suite, "formulas, kuo, ciucu or mt")
      ->required()
      ->check(CLI::IsMember({"formulas", "kuo", "ciucu", "mt"}));
  verify->add_option("--max-a", verify_options.max_a)->check(CLI::Range(1, 8));
  verify->add_option("--max-b", verify_options.max_b)->check(CLI::Range(1, 10));
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--trials", verify_options.trials)->check(CLI::Range(1, 100000));
  verify->add_flag("--printed", verify_options.printed, "Use the expressions exactly as printed");
  verify->add_flag("--inject-fault", verify_options.inject_fault,
                   "Corrupt one Pfaffian entry (must be detected)");

  std::vector<std::string> render_words;
  auto* render = app.add_subcommand("render", "Draw a region as ASCII");
  render->add_option("spec", render_words, "Region spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count) return run_count(join(spec_words), engine, format);
    if (*verify) return run_verify(suite, verify_options);
    if (*render) {
      std::cout << aztec::render_region(aztec::parse_region_spec(join(render_words)));
      return 0;
    }
  } catch (const aztec::Error& e) {
    return exit_for(e);
  }
  return kExitUsage;
}
