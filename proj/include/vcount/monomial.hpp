#ifndef VCOUNT_MONOMIAL_HPP
#define VCOUNT_MONOMIAL_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vcount/errors.hpp"
#include "vcount/integers.hpp"

namespace vcount {

/// A monomial ideal in two variables x, y, stored as its unique minimal
/// generating antichain, canonically ordered (descending x-exponent) so that
/// equality is structural. The zero ideal has no generators; the unit ideal
/// is generated by 1 = x^0 y^0.
class MonomialIdeal2 {
 public:
  /// Exponent pair (a, b) meaning x^a y^b.
  using Gen = std::pair<unsigned, unsigned>;

  MonomialIdeal2() = default;  // zero ideal

  static MonomialIdeal2 zero() { return MonomialIdeal2(); }
  static MonomialIdeal2 unit() { return from_generators({{0, 0}}); }
  static MonomialIdeal2 principal(unsigned a, unsigned b) {
    return from_generators({{a, b}});
  }

  static MonomialIdeal2 from_generators(std::vector<Gen> gens) {
    MonomialIdeal2 ideal;
    ideal.gens_ = std::move(gens);
    ideal.canonicalize();
    return ideal;
  }

  /// (x, y)^k: all monomials of total degree k. Requires k >= 1.
  static MonomialIdeal2 power_of_maximal(unsigned k) {
    if (k < 1)
      throw ValidationError("power_of_maximal requires an exponent >= 1");
    std::vector<Gen> gens;
    gens.reserve(k + 1);
    for (unsigned i = 0; i <= k; ++i) gens.emplace_back(k - i, i);
    return from_generators(std::move(gens));
  }

  const std::vector<Gen>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == Gen{0, 0}; }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  /// Membership: x^a y^b lies in the ideal iff some generator divides it.
  bool contains(unsigned a, unsigned b) const {
    for (const Gen& g : gens_)
      if (g.first <= a && g.second <= b) return true;
    return false;
  }

  friend bool operator==(const MonomialIdeal2& i, const MonomialIdeal2& j) {
    return i.gens_ == j.gens_;
  }
  friend bool operator!=(const MonomialIdeal2& i, const MonomialIdeal2& j) {
    return !(i == j);
  }

  /// Renders as "(x^3*y^2, x^2*y^3)"; the zero ideal as "(0)".
  std::string to_string() const {
    if (is_zero()) return "(0)";
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out << ", ";
      out << monomial_string(gens_[i]);
    }
    out << ')';
    return out.str();
  }

  static std::string monomial_string(const Gen& g) {
    if (g.first == 0 && g.second == 0) return "1";
    std::ostringstream out;
    if (g.first > 0) {
      out << 'x';
      if (g.first > 1) out << '^' << g.first;
    }
    if (g.second > 0) {
      if (g.first > 0) out << '*';
      out << 'y';
      if (g.second > 1) out << '^' << g.second;
    }
    return out.str();
  }

 private:
  void canonicalize() {
    // keep only generators no distinct generator divides, one copy each,
    // sorted by descending x-exponent
    std::vector<Gen> minimal;
    for (const Gen& g : gens_) {
      bool redundant = false;
      for (const Gen& other : gens_)
        if (other != g && other.first <= g.first && other.second <= g.second) {
          redundant = true;
          break;
        }
      if (!redundant &&
          std::find(minimal.begin(), minimal.end(), g) == minimal.end())
        minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Gen& l, const Gen& r) {
      return l.first != r.first ? l.first > r.first : l.second > r.second;
    });
    gens_ = std::move(minimal);
  }

  std::vector<Gen> gens_;
};

/// Intersection: generated by lcm(m, n) over generator pairs.
inline MonomialIdeal2 intersect(const MonomialIdeal2& i,
                                const MonomialIdeal2& j) {
  std::vector<MonomialIdeal2::Gen> gens;
  for (const auto& m : i.generators())
    for (const auto& n : j.generators())
      gens.emplace_back(std::max(m.first, n.first),
                        std::max(m.second, n.second));
  return MonomialIdeal2::from_generators(std::move(gens));
}

/// Product ideal, generated by pairwise products.
inline MonomialIdeal2 multiply(const MonomialIdeal2& i,
                               const MonomialIdeal2& j) {
  std::vector<MonomialIdeal2::Gen> gens;
  for (const auto& m : i.generators())
    for (const auto& n : j.generators())
      gens.emplace_back(m.first + n.first, m.second + n.second);
  return MonomialIdeal2::from_generators(std::move(gens));
}

/// I^k, with I^0 = (1).
inline MonomialIdeal2 power(const MonomialIdeal2& i, unsigned k) {
  MonomialIdeal2 result = MonomialIdeal2::unit();
  for (unsigned step = 0; step < k; ++step) result = multiply(result, i);
  return result;
}

inline bool equal(const MonomialIdeal2& i, const MonomialIdeal2& j) {
  return i == j;
}

/// Number of standard monomials (monomials outside the ideal); nullopt when
/// the quotient is infinite-dimensional, i.e. when the ideal contains no
/// pure power of x or no pure power of y.
inline std::optional<Int> colength(const MonomialIdeal2& i) {
  if (i.is_zero()) return std::nullopt;
  const auto& gens = i.generators();  // a descending, b ascending
  if (gens.front().second != 0 || gens.back().first != 0) return std::nullopt;
  Int count = 0;
  for (std::size_t k = 0; k + 1 < gens.size(); ++k)
    count += Int(gens[k].first - gens[k + 1].first) * Int(gens[k + 1].second);
  return count;
}

/// Canonical irredundant irreducible decomposition. Every component is of
/// the form (x^a), (y^b) or (x^a, y^b); their intersection equals the input
/// (verified before returning). The staircase of the minimal generators
/// (a_1 > ... > a_k, b_1 < ... < b_k) yields the inner corners
/// (x^{a_t}, y^{b_{t+1}}) plus (y^{b_1}) when b_1 > 0 and (x^{a_k}) when
/// a_k > 0.
inline std::vector<MonomialIdeal2> irreducible_decomposition(
    const MonomialIdeal2& i) {
  if (i.is_zero()) throw ZeroIdeal("cannot decompose the zero ideal");
  if (i.is_unit()) throw UnitIdeal("cannot decompose the unit ideal");

  const auto& gens = i.generators();
  std::vector<MonomialIdeal2> components;
  if (gens.front().second > 0)
    components.push_back(MonomialIdeal2::principal(0, gens.front().second));
  for (std::size_t t = 0; t + 1 < gens.size(); ++t)
    components.push_back(MonomialIdeal2::from_generators(
        {{gens[t].first, 0}, {0, gens[t + 1].second}}));
  if (gens.back().first > 0)
    components.push_back(MonomialIdeal2::principal(gens.back().first, 0));

  MonomialIdeal2 check = MonomialIdeal2::unit();
  for (const MonomialIdeal2& c : components) check = intersect(check, c);
  if (check != i)
    throw Error("internal error: decomposition does not intersect back");
  return components;
}

}  // namespace vcount

#endif  // VCOUNT_MONOMIAL_HPP
