#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "vcount/counts.hpp"

using namespace vcount;

namespace {

ContextPtr curve_context() {
  return ChowContext::abstract_variety(1, {{"pt", 1}}, {{{1}, 1}});
}

ContextPtr point_context() {
  return ChowContext::abstract_variety(0, {}, {{{}, 1}});
}

ChowClass pt(const ContextPtr& curve) { return ChowClass::generator(curve, 0); }

/// A genus-g curve component with twist of the given degree.
ConeComponent curve_component(Int multiplicity, int omega_degree,
                              int twist_degree, std::string label = {}) {
  auto ctx = curve_context();
  ConeComponent c(ctx);
  c.multiplicity = std::move(multiplicity);
  c.canonical_twist = Int(twist_degree) * pt(ctx);
  c.cotangent = ChernPolynomial(
      1, ChowClass::one(ctx) + Int(omega_degree) * pt(ctx));
  c.label = std::move(label);
  return c;
}

ConeComponent point_component(Int multiplicity, std::string label = {}) {
  ConeComponent c(point_context());
  c.multiplicity = std::move(multiplicity);
  c.label = std::move(label);
  return c;
}

ConeComponent plane_system_component(unsigned n, unsigned divisors,
                                     std::string label = {}) {
  auto ctx = ChowContext::projective_space(n);
  ConeComponent c(ctx);
  c.node_divisors.assign(divisors, ChowClass::hyperplane(ctx));
  c.label = std::move(label);
  return c;
}

}  // namespace

TEST_CASE("component bundle") {
  // P^2 with trivial twist and 16 hyperplane node divisors
  const ConeComponent lines = plane_system_component(2, 16);
  const ChernPolynomial q = component_bundle(lines);
  CHECK(q.rank() == 2);
  CHECK(q.part(2) == 91 * ChowClass::hyperplane(lines.support).pow(2));

  // point support: rank 0, total 1
  const ConeComponent point = point_component(5);
  CHECK(component_bundle(point).rank() == 0);
  CHECK(component_bundle(point).total() ==
        ChowClass::one(point.support));

  // abstract curve with cotangent degree 6 and twist degree 4
  const ConeComponent w13 = curve_component(1, 6, 4);
  CHECK(component_bundle(w13).part(1) == 2 * pt(w13.support));
}

TEST_CASE("component bundle error paths") {
  ConeComponent bare(curve_context());
  CHECK_THROWS_AS(component_bundle(bare), MissingCotangentData);

  ConeComponent wrong_rank(curve_context());
  wrong_rank.cotangent =
      ChernPolynomial(2, ChowClass::one(wrong_rank.support));
  CHECK_THROWS_AS(component_bundle(wrong_rank), DimensionMismatch);

  ConeComponent bad_divisor(ChowContext::projective_space(2));
  bad_divisor.node_divisors = {
      ChowClass::hyperplane(bad_divisor.support).pow(2)};
  CHECK_THROWS_AS(component_bundle(bad_divisor), NotADivisorClass);
}

TEST_CASE("component contribution") {
  CHECK(component_contribution(point_component(5)) == 5);
  // Fermat quintic plane curve: genus 6, deg omega = 10, trivial twist, m = 2
  CHECK(component_contribution(curve_component(2, 10, 0)) == 20);
  CHECK(component_contribution(plane_system_component(5, 16)) == 2002);

  ConeComponent degenerate = point_component(0);
  CHECK_THROWS_AS(component_contribution(degenerate), ValidationError);
}

TEST_CASE("virtual count of the quintic-lines problem") {
  CountProblem problem;
  problem.rank_v = 6;
  for (int i = 0; i < 50; ++i)
    problem.components.push_back(curve_component(2, 10, 0, "Fermat curve"));
  for (int i = 0; i < 375; ++i)
    problem.components.push_back(point_component(5, "crossing"));
  CHECK(virtual_count(problem) == 2875);
}

TEST_CASE("virtual count edge cases") {
  CHECK(virtual_count(CountProblem{}) == 0);

  CountProblem cubics;
  cubics.components.push_back(plane_system_component(9, 16));
  CHECK(virtual_count(cubics) == 2002);
}

TEST_CASE("dimension validation") {
  CountProblem problem;
  problem.rank_v = 6;
  problem.components.push_back(plane_system_component(2, 16, "lines"));
  problem.components.push_back(point_component(5, "pt"));
  const ValidationReport report = validate_dimensions(problem);
  REQUIRE(report.applicable);
  CHECK(report.pass);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].fiber_dim == 4);
  CHECK(report.entries[1].fiber_dim == 6);

  // a support bigger than rank V is impossible geometry
  problem.rank_v = 1;
  const ValidationReport bad = validate_dimensions(problem);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.entries[0].pass);
  CHECK(bad.entries[0].fiber_dim == -1);
  CHECK(bad.entries[1].pass);

  CHECK_THROWS_AS(virtual_count(problem), DimensionMismatch);
  CHECK(virtual_count(problem, DimensionPolicy::advise) == 91 + 5);

  problem.rank_v.reset();
  CHECK_FALSE(validate_dimensions(problem).applicable);
  CHECK(virtual_count(problem) == 96);
}

TEST_CASE("additivity and multiplicity linearity") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> genus(0, 8);
  std::uniform_int_distribution<int> twist(-3, 3);
  std::uniform_int_distribution<int> mult(1, 5);

  for (int iter = 0; iter < 100; ++iter) {
    CountProblem a, b, both;
    for (int i = 0; i < 4; ++i) {
      ConeComponent c =
          curve_component(mult(rng), 2 * genus(rng) - 2, twist(rng));
      (i % 2 ? a : b).components.push_back(c);
      both.components.push_back(c);
    }
    REQUIRE(virtual_count(both) == virtual_count(a) + virtual_count(b));

    CountProblem doubled = both;
    for (ConeComponent& c : doubled.components) c.multiplicity *= 2;
    REQUIRE(virtual_count(doubled) == 2 * virtual_count(both));
  }
}

TEST_CASE("smooth case: a zero-class divisor changes nothing") {
  for (unsigned n : {2u, 5u}) {
    ConeComponent smooth = plane_system_component(n, 0);
    ConeComponent with_zero = smooth;
    with_zero.node_divisors.push_back(ChowClass::zero(smooth.support));
    CHECK(component_contribution(smooth) ==
          component_contribution(with_zero));
  }
  ConeComponent curve = curve_component(3, 10, 2);
  ConeComponent curve_zero = curve;
  curve_zero.node_divisors.push_back(ChowClass::zero(curve.support));
  CHECK(component_contribution(curve) == component_contribution(curve_zero));
}

TEST_CASE("twist shift on curves") {
  // dim-1 support: contribution = m (deg Omega^1 - deg K), exactly
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> deg(-20, 20);
  std::uniform_int_distribution<int> mult(1, 9);
  for (int iter = 0; iter < 300; ++iter) {
    const int omega = deg(rng);
    const int twist = deg(rng);
    const int m = mult(rng);
    REQUIRE(component_contribution(curve_component(m, omega, twist)) ==
            Int(m) * (Int(omega) - Int(twist)));
  }
}

TEST_CASE("evaluation order does not matter") {
  std::mt19937 rng(678);
  CountProblem problem;
  for (int i = 0; i < 6; ++i)
    problem.components.push_back(curve_component(i + 1, 2 * i, i - 2));
  problem.components.push_back(plane_system_component(2, 16));
  problem.components.push_back(point_component(7));
  const Int reference = virtual_count(problem);
  for (int iter = 0; iter < 20; ++iter) {
    std::shuffle(problem.components.begin(), problem.components.end(), rng);
    REQUIRE(virtual_count(problem) == reference);
  }
}
