#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "vcount/chern.hpp"
#include "vcount/chow.hpp"

using namespace vcount;

namespace {

// --- test-only oracles, independent of the ring implementation ------------

// Pascal's triangle; no falling factorials, no library binomial.
Int pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Int> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// Coefficients of (1 - h)^e truncated to length `len`, by repeated
// convolution: multiply by [1, -1] when e > 0, take prefix sums (i.e.
// multiply by 1 + h + h^2 + ...) when e < 0.
std::vector<Int> one_minus_h_pow(int e, unsigned len) {
  std::vector<Int> series(len, 0);
  series[0] = 1;
  for (int step = 0; step < e; ++step)
    for (unsigned k = len; k-- > 1;) series[k] -= series[k - 1];
  for (int step = 0; step > e; --step)
    for (unsigned k = 1; k < len; ++k) series[k] += series[k - 1];
  return series;
}

ChowClass h_pow(const ContextPtr& ctx, unsigned k) {
  return ChowClass::hyperplane(ctx).pow(k);
}

Int h_coefficient(const ChowClass& cls, unsigned k) {
  return cls.coefficient(Exponents{k});
}

ChernPolynomial random_chern(const ContextPtr& ctx, unsigned rank,
                             std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  ChowClass total = ChowClass::one(ctx);
  for (unsigned d = 1; d <= ctx->dim(); ++d)
    for (const Exponents& mono : ctx->monomials_of_degree(d))
      total = total + ChowClass::from_terms(ctx, {{mono, Int(coeff(rng))}});
  return ChernPolynomial(rank, total);
}

}  // namespace

TEST_CASE("cotangent bundle of projective space") {
  auto p1 = ChowContext::projective_space(1);
  const ChernPolynomial c1 = cotangent_of_projective_space(p1);
  CHECK(c1.rank() == 1);
  CHECK(h_coefficient(c1.total(), 1) == -2);

  auto p2 = ChowContext::projective_space(2);
  const ChernPolynomial c2 = cotangent_of_projective_space(p2);
  CHECK(c2.total() == ChowClass::one(p2) - 3 * h_pow(p2, 1) + 3 * h_pow(p2, 2));

  auto p5 = ChowContext::projective_space(5);
  const ChernPolynomial c5 = cotangent_of_projective_space(p5);
  CHECK(c5.rank() == 5);
  const std::vector<Int> expansion = one_minus_h_pow(6, 6);
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(h_coefficient(c5.total(), k) == expansion[k]);

  auto curve = ChowContext::abstract_variety(1, {{"pt", 1}}, {{{1}, 1}});
  CHECK_THROWS_AS(cotangent_of_projective_space(curve), WrongContextKind);
}

TEST_CASE("whitney product") {
  auto p3 = ChowContext::projective_space(3);
  const ChowClass one = ChowClass::one(p3);
  const ChowClass h = h_pow(p3, 1);
  const ChernPolynomial a(1, one + h);
  const ChernPolynomial b(1, one - h);
  const ChernPolynomial ab = whitney_product(a, b);
  CHECK(ab.rank() == 2);
  CHECK(ab.total() == one - h * h);

  const ChernPolynomial with_trivial =
      whitney_product(a, ChernPolynomial::trivial(p3, 7));
  CHECK(with_trivial.rank() == 8);
  CHECK(with_trivial.total() == a.total());

  // c(Omega^1_{P^2}) * c(O_D)^16 with D = h: 1 + 13 h + 91 h^2
  auto p2 = ChowContext::projective_space(2);
  ChernPolynomial q = cotangent_of_projective_space(p2);
  const ChernPolynomial od = structure_sheaf_of_divisor(h_pow(p2, 1));
  for (int i = 0; i < 16; ++i) q = whitney_product(q, od);
  CHECK(q.rank() == 2);
  CHECK(h_coefficient(q.total(), 1) == 13);
  CHECK(h_coefficient(q.total(), 2) == 91);

  auto p4 = ChowContext::projective_space(4);
  CHECK_THROWS_AS(whitney_product(a, ChernPolynomial::trivial(p4, 0)),
                  ContextMismatch);
}

TEST_CASE("structure sheaf of a divisor") {
  auto p2 = ChowContext::projective_space(2);
  const ChernPolynomial od = structure_sheaf_of_divisor(h_pow(p2, 1));
  CHECK(od.rank() == 0);
  CHECK(od.total() ==
        ChowClass::one(p2) + h_pow(p2, 1) + h_pow(p2, 2));

  const ChernPolynomial trivial =
      structure_sheaf_of_divisor(ChowClass::zero(p2));
  CHECK(trivial.total() == ChowClass::one(p2));

  // sixteen copies multiplied on P^5 equal (1-h)^{-16} truncated
  auto p5 = ChowContext::projective_space(5);
  ChernPolynomial prod = ChernPolynomial::trivial(p5, 0);
  const ChernPolynomial od5 = structure_sheaf_of_divisor(h_pow(p5, 1));
  for (int i = 0; i < 16; ++i) prod = whitney_product(prod, od5);
  const std::vector<Int> expansion = one_minus_h_pow(-16, 6);
  for (unsigned k = 0; k <= 5; ++k)
    CHECK(h_coefficient(prod.total(), k) == expansion[k]);

  CHECK_THROWS_AS(structure_sheaf_of_divisor(h_pow(p2, 2)), NotADivisorClass);
  CHECK_THROWS_AS(structure_sheaf_of_divisor(ChowClass::one(p2) + h_pow(p2, 1)),
                  NotADivisorClass);
}

TEST_CASE("tensor with a line bundle") {
  std::mt19937 rng(4242);
  auto p3 = ChowContext::projective_space(3);

  for (int iter = 0; iter < 300; ++iter) {
    const ChernPolynomial e = random_chern(p3, 3, rng);
    const ChernPolynomial twisted =
        tensor_with_line_bundle(e, ChowClass::zero(p3));
    REQUIRE(twisted.rank() == e.rank());
    REQUIRE(twisted.total() == e.total());
  }

  // rank 1: c_1 shifts by lambda
  const ChowClass h = h_pow(p3, 1);
  const ChernPolynomial line(1, ChowClass::one(p3) + 5 * h);
  const ChernPolynomial shifted = tensor_with_line_bundle(line, 2 * h);
  CHECK(shifted.rank() == 1);
  CHECK(shifted.total() == ChowClass::one(p3) + 7 * h);

  // rank-1 case on a curve: c_1(Omega^1_C (x) K^{-1}) = 6 pt - 4 pt = 2 pt
  auto curve = ChowContext::abstract_variety(1, {{"pt", 1}}, {{{1}, 1}});
  const ChowClass pt = ChowClass::generator(curve, 0);
  const ChernPolynomial omega(1, ChowClass::one(curve) + 6 * pt);
  const ChernPolynomial twisted = tensor_with_line_bundle(omega, Int(-4) * pt);
  CHECK(twisted.total() == ChowClass::one(curve) + 2 * pt);
  CHECK(integrate(top_chern(twisted)) == 2);

  CHECK_THROWS_AS(tensor_with_line_bundle(line, h * h), NotADivisorClass);
}

TEST_CASE("tensor agrees with the splitting principle for sums of lines") {
  // E = O(a) + O(b) + O(c): twisting by O(t) shifts every root.
  auto p3 = ChowContext::projective_space(3);
  const ChowClass one = ChowClass::one(p3);
  const ChowClass h = h_pow(p3, 1);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int t = -2; t <= 2; ++t) {
          const auto line = [&](int k) {
            return ChernPolynomial(1, one + Int(k) * h);
          };
          const ChernPolynomial sum =
              whitney_product(line(a), whitney_product(line(b), line(c)));
          const ChernPolynomial lhs = tensor_with_line_bundle(sum, Int(t) * h);
          const ChernPolynomial rhs = whitney_product(
              line(a + t), whitney_product(line(b + t), line(c + t)));
          REQUIRE(lhs.rank() == rhs.rank());
          REQUIRE(lhs.total() == rhs.total());
        }
}

TEST_CASE("logarithmic cotangent bundle") {
  auto p2 = ChowContext::projective_space(2);
  const ChernPolynomial omega2 = cotangent_of_projective_space(p2);
  CHECK(log_cotangent(omega2, {}) == omega2);

  const std::vector<ChowClass> sixteen(16, h_pow(p2, 1));
  const ChernPolynomial lines = log_cotangent(omega2, sixteen);
  CHECK(lines.rank() == 2);
  CHECK(h_coefficient(lines.total(), 2) == 91);

  auto p4 = ChowContext::projective_space(4);
  const std::vector<ChowClass> thirty_six(36, h_pow(p4, 1));
  const ChernPolynomial quartics =
      log_cotangent(cotangent_of_projective_space(p4), thirty_six);
  CHECK(h_coefficient(quartics.total(), 4) == 46376);

  CHECK_THROWS_AS(log_cotangent(ChernPolynomial::trivial(p2, 0), sixteen),
                  DimensionMismatch);
  CHECK_THROWS_AS(log_cotangent(omega2, {h_pow(p2, 2)}), NotADivisorClass);
}

TEST_CASE("log modification applies divisor by divisor, in any order") {
  std::mt19937 rng(2718);
  auto p3 = ChowContext::projective_space(3);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<ChowClass> divisors;
    for (int i = 0; i < 4; ++i)
      divisors.push_back(Int(coeff(rng)) * h_pow(p3, 1));
    const ChernPolynomial base = cotangent_of_projective_space(p3);
    const ChernPolynomial all_at_once = log_cotangent(base, divisors);
    ChernPolynomial stepwise = base;
    for (const ChowClass& d : divisors) stepwise = log_cotangent(stepwise, {d});
    REQUIRE(all_at_once == stepwise);
    std::shuffle(divisors.begin(), divisors.end(), rng);
    REQUIRE(log_cotangent(base, divisors) == all_at_once);
  }
}

TEST_CASE("top Chern class") {
  auto p5 = ChowContext::projective_space(5);
  CHECK(top_chern(ChernPolynomial::trivial(p5, 0)) == ChowClass::one(p5));

  const std::vector<ChowClass> sixteen(16, h_pow(p5, 1));
  const ChernPolynomial conics =
      log_cotangent(cotangent_of_projective_space(p5), sixteen);
  CHECK(top_chern(conics) == 2002 * h_pow(p5, 5));

  auto p9 = ChowContext::projective_space(9);
  const std::vector<ChowClass> sixteen9(16, h_pow(p9, 1));
  const ChernPolynomial cubics =
      log_cotangent(cotangent_of_projective_space(p9), sixteen9);
  CHECK(top_chern(cubics) == 2002 * h_pow(p9, 9));

  // rank above the dimension: no zeros to count
  auto p2 = ChowContext::projective_space(2);
  CHECK(top_chern(ChernPolynomial::trivial(p2, 5)).is_zero());
}

TEST_CASE("hyperplane-log closed form (sample)") {
  // integral of c_n(Omega^1_{P^n}[log r H]) = C(r-2, n); the full 390-case
  // sweep runs in the acceptance suite.
  for (unsigned n = 1; n <= 6; ++n) {
    auto ctx = ChowContext::projective_space(n);
    for (unsigned r = n + 2; r <= 20; ++r) {
      const std::vector<ChowClass> divisors(r, h_pow(ctx, 1));
      const Int lhs = integrate(
          top_chern(log_cotangent(cotangent_of_projective_space(ctx), divisors)));
      REQUIRE(lhs == pascal(r - 2, n));
      REQUIRE(lhs == one_minus_h_pow(static_cast<int>(n) + 1 - static_cast<int>(r),
                                     n + 1)[n]);
    }
  }
}

TEST_CASE("Euler characteristic of projective space") {
  for (unsigned n = 0; n <= 12; ++n) {
    auto ctx = ChowContext::projective_space(n);
    const Int value =
        integrate(top_chern(cotangent_of_projective_space(ctx)));
    const Int expected = (n % 2 == 0 ? 1 : -1) * Int(n + 1);
    REQUIRE(value == expected);
  }
}

TEST_CASE("whitney product is commutative and associative") {
  std::mt19937 rng(31337);
  auto p4 = ChowContext::projective_space(4);
  for (int iter = 0; iter < 300; ++iter) {
    const ChernPolynomial a = random_chern(p4, 2, rng);
    const ChernPolynomial b = random_chern(p4, 3, rng);
    const ChernPolynomial c = random_chern(p4, 1, rng);
    REQUIRE(whitney_product(a, b) == whitney_product(b, a));
    REQUIRE(whitney_product(whitney_product(a, b), c) ==
            whitney_product(a, whitney_product(b, c)));
    const ChernPolynomial id = ChernPolynomial::trivial(p4, 0);
    REQUIRE(whitney_product(a, id) == a);
  }
}
