#ifndef VCOUNT_CHOW_HPP
#define VCOUNT_CHOW_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcount/errors.hpp"
#include "vcount/integers.hpp"

namespace vcount {

/// Exponent vector of a monomial, aligned with a context's generator list.
/// The empty vector is the monomial 1 on a generator-free context.
using Exponents = std::vector<std::uint32_t>;

class ChowContext;
using ContextPtr = std::shared_ptr<const ChowContext>;

/// A finite presentation of the Chow ring of a base variety: either P^n
/// (integers[h]/(h^{n+1})) or an abstract variety given by named graded
/// generators plus an integration table pairing every top-degree monomial
/// with an integer. Contexts are immutable and shared by the classes that
/// live in them.
class ChowContext {
 public:
  enum class Kind { projective_space, abstract_variety };

  struct Generator {
    std::string name;
    unsigned degree = 1;
  };

  /// The ring integers[h]/(h^{n+1}) with integration table {h^n -> 1}.
  /// n = 0 is a point.
  static ContextPtr projective_space(unsigned n) {
    ChowContext ctx;
    ctx.kind_ = Kind::projective_space;
    ctx.dim_ = n;
    ctx.generators_ = {Generator{"h", 1}};
    ctx.table_[Exponents{n}] = 1;
    return ContextPtr(new ChowContext(std::move(ctx)));
  }

  /// An abstract variety of the given dimension. Every monomial of total
  /// degree `dim` in the generators must appear in `table`; throws
  /// MissingTableEntry otherwise. Generator degrees must be >= 1 and names
  /// unique.
  static ContextPtr abstract_variety(unsigned dim, std::vector<Generator> gens,
                                     std::map<Exponents, Int> table) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].name.empty())
        throw ValidationError("abstract context generator has an empty name");
      if (gens[i].degree == 0)
        throw ValidationError("abstract context generator '" + gens[i].name +
                              "' must have degree >= 1");
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i].name == gens[j].name)
          throw ValidationError("duplicate generator name '" + gens[i].name +
                                "'");
    }

    ChowContext ctx;
    ctx.kind_ = Kind::abstract_variety;
    ctx.dim_ = dim;
    ctx.generators_ = std::move(gens);
    ctx.table_ = std::move(table);

    for (const auto& [mono, value] : ctx.table_) {
      if (mono.size() != ctx.generators_.size())
        throw ValidationError(
            "integration table key has wrong number of exponents");
      if (ctx.degree_of(mono) != dim)
        throw ValidationError("integration table entry for monomial " +
                              ctx.monomial_name(mono) +
                              " is not of top degree");
      (void)value;
    }
    for (const Exponents& mono : ctx.monomials_of_degree(dim))
      if (!ctx.table_.count(mono))
        throw MissingTableEntry("integration table lacks an entry for " +
                                ctx.monomial_name(mono));
    return ContextPtr(new ChowContext(std::move(ctx)));
  }

  Kind kind() const { return kind_; }
  unsigned dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::map<Exponents, Int>& integration_table() const { return table_; }

  /// Weighted total degree of a monomial.
  unsigned degree_of(const Exponents& mono) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i)
      d += mono[i] * generators_[i].degree;
    return d;
  }

  std::optional<std::size_t> generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].name == name) return i;
    return std::nullopt;
  }

  /// Renders a monomial as "1", "h^2" or "a*b^3".
  std::string monomial_name(const Exponents& mono) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!first) out << '*';
      out << generators_[i].name;
      if (mono[i] > 1) out << '^' << mono[i];
      first = false;
    }
    return first ? "1" : out.str();
  }

  /// All exponent vectors of weighted total degree exactly `degree`.
  std::vector<Exponents> monomials_of_degree(unsigned degree) const {
    std::vector<Exponents> result;
    Exponents current(generators_.size(), 0);
    enumerate(0, degree, current, result);
    return result;
  }

  /// Structural equality; classes from equal contexts are interoperable.
  bool equivalent(const ChowContext& other) const {
    if (kind_ != other.kind_ || dim_ != other.dim_) return false;
    if (generators_.size() != other.generators_.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].name != other.generators_[i].name ||
          generators_[i].degree != other.generators_[i].degree)
        return false;
    return table_ == other.table_;
  }

 private:
  ChowContext() = default;

  void enumerate(std::size_t index, unsigned remaining, Exponents& current,
                 std::vector<Exponents>& out) const {
    if (index == generators_.size()) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const unsigned step = generators_[index].degree;
    for (unsigned used = 0; used * step <= remaining; ++used) {
      current[index] = used;
      enumerate(index + 1, remaining - used * step, current, out);
    }
    current[index] = 0;
  }

  Kind kind_ = Kind::projective_space;
  unsigned dim_ = 0;
  std::vector<Generator> generators_;
  std::map<Exponents, Int> table_;
};

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (a && b && a->equivalent(*b)) return;
  throw ContextMismatch("classes live in different Chow contexts");
}

/// A graded element of a ChowContext with exact integer coefficients.
/// Monomials of degree above the context dimension are identically zero;
/// every operation maintains that truncation. Immutable value type.
class ChowClass {
 public:
  /// The zero class.
  explicit ChowClass(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// c * 1.
  static ChowClass constant(ContextPtr ctx, Int c) {
    ChowClass r(std::move(ctx));
    if (c != 0) r.terms_[Exponents(r.ctx_->generators().size(), 0)] = std::move(c);
    return r;
  }

  static ChowClass one(ContextPtr ctx) { return constant(std::move(ctx), 1); }
  static ChowClass zero(ContextPtr ctx) { return ChowClass(std::move(ctx)); }

  /// The class of the i-th generator (zero if its degree already exceeds
  /// the context dimension, as on P^0).
  static ChowClass generator(ContextPtr ctx, std::size_t index) {
    ChowClass r(std::move(ctx));
    Exponents mono(r.ctx_->generators().size(), 0);
    mono.at(index) = 1;
    if (r.ctx_->degree_of(mono) <= r.ctx_->dim()) r.terms_[mono] = 1;
    return r;
  }

  /// The hyperplane class h of a projective-space context.
  static ChowClass hyperplane(ContextPtr ctx) {
    if (ctx->kind() != ChowContext::Kind::projective_space)
      throw WrongContextKind("hyperplane class requires a projective space");
    return generator(std::move(ctx), 0);
  }

  /// Builds a class from an exponent-vector/coefficient map; zero
  /// coefficients are dropped and monomials above the dimension truncated.
  static ChowClass from_terms(ContextPtr ctx, std::map<Exponents, Int> terms) {
    ChowClass r(std::move(ctx));
    for (auto& [mono, coeff] : terms) {
      if (mono.size() != r.ctx_->generators().size())
        throw ValidationError("monomial has wrong number of exponents");
      if (coeff == 0 || r.ctx_->degree_of(mono) > r.ctx_->dim()) continue;
      r.terms_[mono] = std::move(coeff);
    }
    return r;
  }

  const ContextPtr& context() const { return ctx_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const Exponents& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Coefficient of the monomial 1.
  Int constant_part() const {
    return coefficient(Exponents(ctx_->generators().size(), 0));
  }

  /// The degree-d graded piece.
  ChowClass graded_part(unsigned d) const {
    ChowClass r(ctx_);
    for (const auto& [mono, coeff] : terms_)
      if (ctx_->degree_of(mono) == d) r.terms_[mono] = coeff;
    return r;
  }

  /// True when every monomial present has degree d (zero class: true).
  bool is_homogeneous(unsigned d) const {
    for (const auto& [mono, coeff] : terms_)
      if (ctx_->degree_of(mono) != d) return false;
    return true;
  }

  ChowClass operator-() const {
    ChowClass r(ctx_);
    for (const auto& [mono, coeff] : terms_) r.terms_[mono] = -coeff;
    return r;
  }

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_same_context(a.ctx_, b.ctx_);
    ChowClass r = a;
    for (const auto& [mono, coeff] : b.terms_) {
      Int& slot = r.terms_[mono];
      slot += coeff;
      if (slot == 0) r.terms_.erase(mono);
    }
    return r;
  }

  friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
    return a + (-b);
  }

  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    require_same_context(a.ctx_, b.ctx_);
    const unsigned dim = a.ctx_->dim();
    ChowClass r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
      const unsigned da = a.ctx_->degree_of(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (da + a.ctx_->degree_of(mb) > dim) continue;
        Exponents mono = ma;
        for (std::size_t i = 0; i < mono.size(); ++i) mono[i] += mb[i];
        Int& slot = r.terms_[mono];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(mono);
      }
    }
    return r;
  }

  friend ChowClass operator*(const Int& k, const ChowClass& a) {
    ChowClass r(a.ctx_);
    if (k == 0) return r;
    for (const auto& [mono, coeff] : a.terms_) r.terms_[mono] = k * coeff;
    return r;
  }

  friend ChowClass operator*(const ChowClass& a, const Int& k) { return k * a; }

  ChowClass pow(unsigned k) const {
    ChowClass r = one(ctx_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return (a.ctx_ == b.ctx_ || a.ctx_->equivalent(*b.ctx_)) &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const ChowClass& a, const ChowClass& b) {
    return !(a == b);
  }

 private:
  ContextPtr ctx_;
  std::map<Exponents, Int> terms_;  // nonzero coefficients only
};

/// add/mul/scale spelled as named operations.
inline ChowClass add(const ChowClass& a, const ChowClass& b) { return a + b; }
inline ChowClass mul(const ChowClass& a, const ChowClass& b) { return a * b; }
inline ChowClass scale(const Int& k, const ChowClass& a) { return k * a; }

/// Degree of the 0-dimensional piece: pairs the top-degree part against the
/// integration table and ignores everything of lower degree, so a class with
/// no top-degree part integrates to 0.
inline Int integrate(const ChowClass& a) {
  const ChowContext& ctx = *a.context();
  Int total = 0;
  for (const auto& [mono, coeff] : a.terms()) {
    if (ctx.degree_of(mono) != ctx.dim()) continue;
    auto it = ctx.integration_table().find(mono);
    if (it == ctx.integration_table().end())
      throw MissingTableEntry("no integration table entry for " +
                              ctx.monomial_name(mono));
    total += coeff * it->second;
  }
  return total;
}

/// Multiplicative inverse of a class with degree-0 part 1, via the finite
/// Neumann series (1 + m)^{-1} = sum (-m)^k, k <= dim.
inline ChowClass geometric_series_inverse(const ChowClass& a) {
  if (a.constant_part() != 1)
    throw NotAUnit("series inverse requires degree-0 part equal to 1");
  const ChowClass m = a - ChowClass::one(a.context());
  ChowClass result = ChowClass::one(a.context());
  ChowClass power = ChowClass::one(a.context());
  for (unsigned k = 1; k <= a.context()->dim(); ++k) {
    power = power * m;
    if (power.is_zero()) break;
    result = (k % 2 == 0) ? result + power : result - power;
  }
  return result;
}

}  // namespace vcount

#endif  // VCOUNT_CHOW_HPP
