#ifndef VCOUNT_CHERN_HPP
#define VCOUNT_CHERN_HPP

#include <utility>
#include <vector>

#include "vcount/chow.hpp"
#include "vcount/errors.hpp"
#include "vcount/integers.hpp"

namespace vcount {

/// Total Chern class (unit constant term) of a locally free sheaf of known
/// rank, living in a ChowContext. Rank bookkeeping: Whitney sums add ranks,
/// quotients subtract, tensoring by a line bundle and logarithmic
/// modifications leave the rank unchanged.
class ChernPolynomial {
 public:
  ChernPolynomial(unsigned rank, ChowClass total)
      : rank_(rank), total_(std::move(total)) {
    if (total_.constant_part() != 1)
      throw ValidationError("total Chern class must have degree-0 part 1");
  }

  /// The trivial bundle of the given rank: total class 1.
  static ChernPolynomial trivial(ContextPtr ctx, unsigned rank = 0) {
    return ChernPolynomial(rank, ChowClass::one(std::move(ctx)));
  }

  unsigned rank() const { return rank_; }
  const ChowClass& total() const { return total_; }
  const ContextPtr& context() const { return total_.context(); }

  /// c_k: the degree-k graded piece of the total class.
  ChowClass part(unsigned k) const { return total_.graded_part(k); }

  friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
    return a.rank_ == b.rank_ && a.total_ == b.total_;
  }
  friend bool operator!=(const ChernPolynomial& a, const ChernPolynomial& b) {
    return !(a == b);
  }

 private:
  unsigned rank_;
  ChowClass total_;
};

namespace detail {

inline void require_divisor_class(const ChowClass& d) {
  if (!d.is_homogeneous(1))
    throw NotADivisorClass("divisor class must be homogeneous of degree 1");
}

}  // namespace detail

/// c(Omega^1_{P^n}) = (1 - h)^{n+1}, rank n. From the dual Euler sequence.
inline ChernPolynomial cotangent_of_projective_space(const ContextPtr& ctx) {
  if (ctx->kind() != ChowContext::Kind::projective_space)
    throw WrongContextKind(
        "cotangent_of_projective_space requires a projective-space context");
  const ChowClass one_minus_h =
      ChowClass::one(ctx) - ChowClass::hyperplane(ctx);
  return ChernPolynomial(ctx->dim(), one_minus_h.pow(ctx->dim() + 1));
}

/// Whitney formula: c(E + F) = c(E) c(F), ranks add.
inline ChernPolynomial whitney_product(const ChernPolynomial& a,
                                       const ChernPolynomial& b) {
  return ChernPolynomial(a.rank() + b.rank(), a.total() * b.total());
}

/// c(O_D) = (1 - D)^{-1}, rank 0, from the divisor exact sequence
/// 0 -> O(-D) -> O -> O_D -> 0 and the Whitney formula.
inline ChernPolynomial structure_sheaf_of_divisor(const ChowClass& divisor) {
  detail::require_divisor_class(divisor);
  return ChernPolynomial(
      0, geometric_series_inverse(ChowClass::one(divisor.context()) - divisor));
}

/// Splitting-principle twist by a line bundle with c_1 = lambda:
/// c_k(E (x) L) = sum_{i=0..k} C(rank - i, k - i) c_i(E) lambda^{k-i}.
/// The rank is unchanged.
inline ChernPolynomial tensor_with_line_bundle(const ChernPolynomial& e,
                                               const ChowClass& lambda) {
  detail::require_divisor_class(lambda);
  require_same_context(e.context(), lambda.context());
  const ContextPtr& ctx = e.context();
  const unsigned dim = ctx->dim();

  std::vector<ChowClass> lambda_pow;
  lambda_pow.reserve(dim + 1);
  lambda_pow.push_back(ChowClass::one(ctx));
  for (unsigned j = 1; j <= dim; ++j)
    lambda_pow.push_back(lambda_pow.back() * lambda);

  ChowClass total = ChowClass::zero(ctx);
  for (unsigned k = 0; k <= dim; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      const Int b = binomial(static_cast<long long>(e.rank()) - i, k - i);
      if (b == 0) continue;
      total = total + b * (e.part(i) * lambda_pow[k - i]);
    }
  }
  return ChernPolynomial(e.rank(), total);
}

/// Logarithmic modification of a cotangent-type bundle along divisors:
/// c(E[log D]) = c(E) prod_i (1 - D_i)^{-1}. The quotient (+) O_{D_i} has
/// rank 0, so the rank is unchanged. Requires rank = dim (the bundle must be
/// of cotangent type for the residue extension to make sense).
inline ChernPolynomial log_cotangent(const ChernPolynomial& base,
                                     const std::vector<ChowClass>& divisors) {
  if (base.rank() != base.context()->dim())
    throw DimensionMismatch(
        "log modification requires a bundle of rank equal to the dimension");
  ChowClass total = base.total();
  for (const ChowClass& d : divisors) {
    detail::require_divisor_class(d);
    require_same_context(base.context(), d.context());
    total = total * geometric_series_inverse(ChowClass::one(d.context()) - d);
  }
  return ChernPolynomial(base.rank(), total);
}

/// c_top: the degree-rank part of the total class (zero when the rank
/// exceeds the ambient dimension; c_0 = 1 for rank-0 sheaves).
inline ChowClass top_chern(const ChernPolynomial& e) {
  if (e.rank() > e.context()->dim()) return ChowClass::zero(e.context());
  return e.part(e.rank());
}

}  // namespace vcount

#endif  // VCOUNT_CHERN_HPP
