#include <charconv>
#include <string>
#include <vector>

#include "aztec/cli.hpp"

namespace aztec {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void syntax(const Token& token, const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, "column " + std::to_string(token.column) + ", '" +
                                                std::string(token.text) + "': " + message);
}

int parse_int(const Token& token, std::string_view digits) {
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
    syntax(token, "expected an integer, got '" + std::string(digits) + "'");
  }
  return value;
}

int keyed_int(const Token& token, std::string_view key) {
  if (token.text.substr(0, key.size()) != key) {
    syntax(token, "expected " + std::string(key) + "INT");
  }
  return parse_int(token, token.text.substr(key.size()));
}

}  // namespace

DefectConfiguration parse_region_spec(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw Error(ErrorCode::kInvalidParameter, "empty region spec");
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Token& {
    if (at >= tokens.size()) {
      throw Error(ErrorCode::kInvalidParameter,
                  "column " + std::to_string(text.size() + 1) + ": expected " + what);
    }
    return tokens[at++];
  };

  const Token& kind = next("AD or AR");
  Region region;
  if (kind.text == "AD") {
    const Token& t = next("n=INT");
    const int n = keyed_int(t, "n=");
    try {
      region = make_aztec_diamond(n);
    } catch (const Error& e) {
      syntax(t, e.what());
    }
  } else if (kind.text == "AR") {
    const Token& ta = next("a=INT");
    const int a = keyed_int(ta, "a=");
    const Token& tb = next("b=INT");
    const int b = keyed_int(tb, "b=");
    try {
      region = make_aztec_rectangle(a, b);
    } catch (const Error& e) {
      syntax(tb, e.what());
    }
  } else {
    syntax(kind, "expected AD or AR");
  }

  if (at < tokens.size() && tokens[at].text.starts_with("gamma=")) {
    const Token& t = tokens[at++];
    const std::string_view body = t.text.substr(6);
    const std::size_t sep = body.find('@');
    const int k = parse_int(t, body.substr(0, sep));
    const int start = sep == std::string_view::npos ? 1 : parse_int(t, body.substr(sep + 1));
    try {
      region = add_gamma_squares(region, k, start);
    } catch (const Error& e) {
      syntax(t, e.what());
    }
  }

  std::vector<DefectSpec> defects;
  if (at < tokens.size() && tokens[at].text.starts_with("remove=")) {
    const Token& t = tokens[at++];
    std::string_view list = t.text.substr(7);
    if (list.empty()) syntax(t, "empty defect list");
    while (true) {
      const std::size_t comma = list.find(',');
      const std::string_view item = list.substr(0, comma);
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos) syntax(t, "defect '" + std::string(item) + "' lacks SIDE:INT");
      const auto side = parse_side(item.substr(0, colon));
      if (!side) syntax(t, "unknown side '" + std::string(item.substr(0, colon)) + "'");
      defects.push_back(boundary_defect(*side, parse_int(t, item.substr(colon + 1))));
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
    try {
      DefectConfiguration config = make_configuration(region, defects);
      residual_region(config);
      if (at < tokens.size()) syntax(tokens[at], "unexpected token");
      return config;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidParameter) throw;
      throw Error(e.code(), "column " + std::to_string(t.column) + ", '" + std::string(t.text) +
                                "': " + e.what());
    }
  }
  if (at < tokens.size()) syntax(tokens[at], "unexpected token");
  return make_configuration(region, defects);
}

std::string format_region_spec(const DefectConfiguration& config) {
  const RegionMeta& meta = config.region.meta();
  std::string out = meta.a == meta.b && meta.kind == RegionKind::kDiamond
                        ? "AD n=" + std::to_string(meta.a)
                        : "AR a=" + std::to_string(meta.a) + " b=" + std::to_string(meta.b);
  if (!meta.gamma_positions.empty()) {
    out += " gamma=" + std::to_string(meta.gamma_positions.size());
    if (meta.gamma_positions.front() != 1) out += "@" + std::to_string(meta.gamma_positions.front());
  }
  std::vector<DefectSpec> all = config.betas;
  all.insert(all.end(), config.alphas.begin(), config.alphas.end());
  if (!all.empty()) {
    out += " remove=";
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i > 0) out += ",";
      out += std::string(side_name(all[i].side)) + ":" + std::to_string(all[i].position);
    }
  }
  return out;
}

}  // namespace aztec
