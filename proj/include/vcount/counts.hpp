#ifndef VCOUNT_COUNTS_HPP
#define VCOUNT_COUNTS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vcount/chern.hpp"
#include "vcount/chow.hpp"
#include "vcount/errors.hpp"
#include "vcount/integers.hpp"

namespace vcount {

/// One component C of the normal cone: its smooth support S'(C), geometric
/// multiplicity m(C), the canonical twist c_1(K_{S'}) (zero when the twist
/// is trivial), and the divisor classes of curves through each node (empty
/// in the smooth case).
///
/// Projective-space supports derive their cotangent bundle; abstract
/// supports must carry one supplied by the caller (e.g. 1 + (2g-2) pt on a
/// genus-g curve), since the engine cannot derive Omega^1 of an arbitrary
/// variety. Dimension-0 supports default to the rank-0 trivial bundle.
struct ConeComponent {
  ContextPtr support;
  Int multiplicity = 1;
  ChowClass canonical_twist;
  std::vector<ChowClass> node_divisors;
  std::optional<ChernPolynomial> cotangent;
  std::string label;

  explicit ConeComponent(ContextPtr support_)
      : support(support_), canonical_twist(ChowClass::zero(support_)) {}

  ConeComponent(ContextPtr support_, Int multiplicity_,
                ChowClass canonical_twist_,
                std::vector<ChowClass> node_divisors_ = {},
                std::optional<ChernPolynomial> cotangent_ = std::nullopt,
                std::string label_ = {})
      : support(std::move(support_)),
        multiplicity(std::move(multiplicity_)),
        canonical_twist(std::move(canonical_twist_)),
        node_divisors(std::move(node_divisors_)),
        cotangent(std::move(cotangent_)),
        label(std::move(label_)) {}
};

/// A full count problem: the components of the normal cone plus optional
/// rank-V metadata (rank V = dim J') used by the dimension validation.
struct CountProblem {
  std::vector<ConeComponent> components;
  std::optional<unsigned> rank_v;
};

/// Per-component result of the dimension validation: the cone over a
/// component with support of dimension s must have fibers of dimension
/// rank V - s >= 0.
struct DimensionEntry {
  std::string label;
  unsigned support_dim = 0;
  long long fiber_dim = 0;  // rank_v - support_dim; negative means failure
  bool pass = true;
};

struct ValidationReport {
  bool applicable = false;  // rank_v was present
  bool pass = true;
  std::vector<DimensionEntry> entries;
};

/// Builds c(Q_{S'}) = c(Omega^1_{S'} (x) K^{-1}) * prod_i (1 - D_i)^{-1},
/// rank = dim S'. Throws MissingCotangentData for abstract supports of
/// positive dimension without attached cotangent data, DimensionMismatch if
/// the attached data has the wrong rank.
inline ChernPolynomial component_bundle(const ConeComponent& c) {
  const ContextPtr& ctx = c.support;

  ChernPolynomial base = [&]() -> ChernPolynomial {
    if (ctx->kind() == ChowContext::Kind::projective_space)
      return cotangent_of_projective_space(ctx);
    if (c.cotangent) return *c.cotangent;
    if (ctx->dim() == 0) return ChernPolynomial::trivial(ctx, 0);
    throw MissingCotangentData(
        "abstract support '" + c.label +
        "' of positive dimension needs an attached cotangent Chern class");
  }();

  require_same_context(base.context(), ctx);
  if (base.rank() != ctx->dim())
    throw DimensionMismatch("cotangent data for '" + c.label + "' has rank " +
                            std::to_string(base.rank()) +
                            " but the support has dimension " +
                            std::to_string(ctx->dim()));

  const ChernPolynomial twisted =
      tensor_with_line_bundle(base, -c.canonical_twist);
  return log_cotangent(twisted, c.node_divisors);
}

/// m(C) * integral of c_top(Q_{S'}) over S'(C). Signed: nothing in the
/// formula forces positivity.
inline Int component_contribution(const ConeComponent& c) {
  if (c.multiplicity < 1)
    throw ValidationError("component multiplicity must be >= 1");
  return c.multiplicity * integrate(top_chern(component_bundle(c)));
}

/// Checks dim S'(C) <= rank V for every component and records the cone fiber
/// dimension rank V - dim S'(C). Failures are carried in the report, never
/// thrown.
inline ValidationReport validate_dimensions(const CountProblem& p) {
  ValidationReport report;
  if (!p.rank_v) return report;
  report.applicable = true;
  const long long rank_v = static_cast<long long>(*p.rank_v);
  for (const ConeComponent& c : p.components) {
    DimensionEntry entry;
    entry.label = c.label;
    entry.support_dim = c.support->dim();
    entry.fiber_dim = rank_v - static_cast<long long>(entry.support_dim);
    entry.pass = entry.fiber_dim >= 0;
    report.pass = report.pass && entry.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

enum class DimensionPolicy { enforce, advise };

/// gamma(I') = sum over cone components of m(C) * deg c_top(Q_{S'(C)}).
/// With DimensionPolicy::enforce (the default), a failing dimension check
/// raises DimensionMismatch; advise skips the gate so callers can report
/// the failure alongside the count.
inline Int virtual_count(const CountProblem& p,
                         DimensionPolicy policy = DimensionPolicy::enforce) {
  if (policy == DimensionPolicy::enforce) {
    const ValidationReport report = validate_dimensions(p);
    if (report.applicable && !report.pass) {
      std::ostringstream out;
      out << "dimension validation failed:";
      for (const DimensionEntry& e : report.entries)
        if (!e.pass)
          out << " component '" << e.label << "' has dim " << e.support_dim
              << " > rank V " << *p.rank_v << ";";
      throw DimensionMismatch(out.str());
    }
  }
  Int total = 0;
  for (const ConeComponent& c : p.components)
    total += component_contribution(c);
  return total;
}

}  // namespace vcount

#endif  // VCOUNT_COUNTS_HPP
