#ifndef VCOUNT_IDEAL_TEXT_HPP
#define VCOUNT_IDEAL_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "vcount/errors.hpp"
#include "vcount/monomial.hpp"

namespace vcount {

/// Parses the textual rendering of a two-variable monomial ideal, e.g.
/// "(x^3*y^2, x^2*y^3)", "(1)", "(0)", or a power such as "(x,y)^5".
///
/// Grammar:
///   expr    := '(' body ')' ('^' uint)?
///   body    := '0' | mono (',' mono)*
///   mono    := '1' | factor ('*' factor)*
///   factor  := ('x' | 'y') ('^' uint)?
inline MonomialIdeal2 parse_monomial_ideal(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at column " + std::to_string(pos + 1), 1,
                      pos + 1);
  };
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  const auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  const auto peek = [&]() -> int {
    skip_ws();
    return pos < text.size() ? text[pos] : -1;
  };
  const auto parse_uint = [&]() -> unsigned {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw fail("expected a number");
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1000000) throw fail("exponent too large");
      ++pos;
    }
    return static_cast<unsigned>(value);
  };

  const auto parse_factor = [&](unsigned& a, unsigned& b) {
    const int c = peek();
    if (c != 'x' && c != 'y') throw fail("expected 'x' or 'y'");
    ++pos;
    unsigned e = 1;
    if (peek() == '^') {
      ++pos;
      e = parse_uint();
    }
    (c == 'x' ? a : b) += e;
  };

  const auto parse_mono = [&]() -> MonomialIdeal2::Gen {
    if (peek() == '1') {
      ++pos;
      return {0, 0};
    }
    unsigned a = 0, b = 0;
    parse_factor(a, b);
    while (peek() == '*') {
      ++pos;
      parse_factor(a, b);
    }
    return {a, b};
  };

  expect('(');
  MonomialIdeal2 ideal;
  if (peek() == '0') {
    ++pos;
    ideal = MonomialIdeal2::zero();
  } else {
    std::vector<MonomialIdeal2::Gen> gens;
    gens.push_back(parse_mono());
    while (peek() == ',') {
      ++pos;
      gens.push_back(parse_mono());
    }
    ideal = MonomialIdeal2::from_generators(std::move(gens));
  }
  expect(')');

  if (peek() == '^') {
    ++pos;
    const unsigned k = parse_uint();
    if (k > 64) throw fail("ideal power too large");
    ideal = power(ideal, k);
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing input");
  return ideal;
}

}  // namespace vcount

#endif  // VCOUNT_IDEAL_TEXT_HPP
