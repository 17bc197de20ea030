#include <charconv>
#include <sstream>

#include "oseq/errors.hpp"
#include "oseq/monomial.hpp"
#include "text_util.hpp"

namespace oseq {

OrderIdeal parse_order_ideal(std::string_view text) {
  std::optional<std::size_t> vars;
  std::vector<Monomial> gens;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::strip_comment(line);
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (detail::starts_with_key(line, "vars")) {
      if (vars) throw InputError(where() + "duplicate vars= line");
      vars = detail::parse_uint(detail::value_after_eq(line), where() + "vars");
      if (*vars == 0) throw InputError(where() + "vars must be positive");
      continue;
    }
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] != "gen") {
      throw InputError(where() + "expected 'gen e1 ... ed', got '" + std::string(line) + "'");
    }
    if (!vars) throw InputError(where() + "gen before vars=");
    if (tokens.size() - 1 != *vars) {
      throw InputError(where() + "expected " + std::to_string(*vars) + " exponents, got " +
                       std::to_string(tokens.size() - 1));
    }
    std::vector<Exponent> exps;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto e = detail::parse_uint(tokens[i], where() + "exponent");
      if (e > kMaxDegree) throw OverflowError(where() + "exponent too large");
      exps.push_back(static_cast<Exponent>(e));
    }
    gens.emplace_back(std::move(exps));
  }
  if (!vars) throw InputError("missing vars= line");
  return OrderIdeal(*vars, std::move(gens));
}

std::string format_order_ideal(const OrderIdeal& ideal) {
  std::string out = "vars=" + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators()) out += "gen " + g.to_string() + "\n";
  return out;
}

}  // namespace oseq
