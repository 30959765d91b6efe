#ifndef VCOUNT_INTEGERS_HPP
#define VCOUNT_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace vcount {

/// Exact arbitrary-precision integer. Every coefficient, multiplicity and
/// count in this library is an Int; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k) for arbitrary integer n and k >= 0, via the
/// falling factorial n(n-1)...(n-k+1)/k!. For negative n this is the
/// generalized binomial, e.g. C(-3, 2) = 6; C(n, 0) = 1 for every n.
inline Int binomial(long long n, unsigned k) {
  Int num = 1;
  Int den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= Int(n) - Int(i);
    den *= Int(i) + 1;
  }
  return num / den;
}

}  // namespace vcount

#endif  // VCOUNT_INTEGERS_HPP
