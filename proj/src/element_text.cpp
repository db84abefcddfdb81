#include <charconv>
#include <string>

#include "f2units/algebra.hpp"
#include "f2units/errors.hpp"

namespace f2units {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string monomial(const AbelianTwoGroup& g, GroupElement x) {
  std::string out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::uint32_t e = g.exponent_at(x, i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'a' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t parse_number(std::string_view s, std::string_view term) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad number in term '" + std::string(term) + "'");
  }
  return v;
}

GroupElement parse_term(const AbelianTwoGroup& g, std::string_view term) {
  if (term == "1") return g.identity();
  GroupElement x = g.identity();
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t end = term.find('*', start);
    if (end == std::string_view::npos) end = term.size();
    std::string_view factor = trim(term.substr(start, end - start));
    if (factor.empty() || factor.front() != 'a') {
      throw ParseError("bad factor in term '" + std::string(term) + "'");
    }
    factor.remove_prefix(1);
    std::uint64_t exponent = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      exponent = parse_number(trim(factor.substr(caret + 1)), term);
      factor = trim(factor.substr(0, caret));
    }
    // A bare "a" names the generator of a cyclic group.
    std::uint64_t position = 1;
    if (!factor.empty()) {
      position = parse_number(factor, term);
    } else if (g.rank() != 1) {
      throw ParseError("'a' without an index needs a cyclic group");
    }
    if (position < 1 || position > g.rank()) {
      throw ParseError("generator index out of range in term '" + std::string(term) + "'");
    }
    x = g.mul(x, g.pow(g.generator(position - 1), exponent));
    start = end + 1;
  }
  return x;
}

}  // namespace

std::string GroupAlgebra::to_string(const AlgebraElement& x) const {
  check(x);
  if (x.is_zero()) return "0";
  std::string out;
  for (std::uint32_t g = 0; g < dimension(); ++g) {
    if (!x.coefficient({g})) continue;
    if (!out.empty()) out += " + ";
    out += monomial(group_, {g});
  }
  return out;
}

AlgebraElement GroupAlgebra::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParseError("empty algebra element");
  std::uint64_t bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view term = trim(text.substr(start, end - start));
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    if (term != "0") bits ^= 1ull << parse_term(group_, term).index;
    start = end + 1;
  }
  return {bits, id_};
}

}  // namespace f2units
