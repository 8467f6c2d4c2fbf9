#ifndef LOGJET_POLY_HPP
#define LOGJET_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "context.hpp"
#include "scalar.hpp"

namespace logjet {

// Exact multivariate polynomial. Terms are kept sorted in descending
// monomial order (the ring's order), leading term first, no zero
// coefficients; printing this sequence is the canonical form.
class Polynomial {
 public:
  using Term = std::pair<Monomial, FieldScalar>;

  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, const FieldScalar& c);
  static Polynomial constant(ContextPtr ctx, long v);
  static Polynomial variable(ContextPtr ctx, const std::string& name);
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  std::uint64_t degree_in(std::uint32_t var) const;

  const Monomial& leading_monomial() const;
  const FieldScalar& leading_coefficient() const;
  FieldScalar coefficient_of(const Monomial& m) const;
  FieldScalar constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldScalar& c) const;
  Polynomial times_term(const Monomial& m, const FieldScalar& c) const;
  Polynomial pow(std::uint32_t e) const;

  // Over the rationals: integer-primitive form with positive leading
  // coefficient (content divided out). Identity in positive characteristic.
  Polynomial primitive() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Formal partial derivative with respect to a declared variable.
  Polynomial derivative(const std::string& var) const;
  Polynomial derivative(std::uint32_t var) const;

  // Value at a rational point (one scalar per context variable).
  FieldScalar evaluate(const std::vector<FieldScalar>& point) const;

  // Image under a variable renaming into another context; every variable
  // occurring in *this must be mapped.
  Polynomial rename(const ContextPtr& target,
                    const std::vector<std::uint32_t>& var_map) const;

  std::string to_string() const;

 private:
  void check_ctx(const Polynomial& o) const;
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text);

// c_0 + c_1 t + ... + c_n t^n with polynomial coefficients; every operation
// discards powers of t above the order.
class TruncatedPoly {
 public:
  TruncatedPoly(ContextPtr ctx, std::uint32_t order);
  static TruncatedPoly constant(ContextPtr ctx, std::uint32_t order,
                                const Polynomial& c);

  std::uint32_t order() const { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  const ContextPtr& context() const { return ctx_; }
  const Polynomial& coeff(std::uint32_t i) const { return coeffs_.at(i); }
  Polynomial& coeff(std::uint32_t i) { return coeffs_.at(i); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  TruncatedPoly operator+(const TruncatedPoly& o) const;
  TruncatedPoly operator-(const TruncatedPoly& o) const;
  TruncatedPoly operator*(const TruncatedPoly& o) const;
  TruncatedPoly pow(std::uint32_t e) const;
  TruncatedPoly truncated(std::uint32_t new_order) const;  // new_order <= order

  bool operator==(const TruncatedPoly& o) const;
  bool operator!=(const TruncatedPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check(const TruncatedPoly& o) const;
  ContextPtr ctx_;
  std::vector<Polynomial> coeffs_;
};

// Truncated evaluation of f with every variable replaced by a jet; all
// images must share one context and order. Ring homomorphism by
// construction.
TruncatedPoly substitute(const Polynomial& f,
                         const std::map<std::string, TruncatedPoly>& images);

// --- univariate helpers (used by the Mason / conductor machinery) ---

bool is_univariate(const Polynomial& f, std::uint32_t* var_out = nullptr);
// Monic gcd over the coefficient field; f, g univariate in the same variable
// (constants allowed).
Polynomial poly_gcd_univariate(const Polynomial& f, const Polynomial& g);
// Exact division; throws DomainError if the division leaves a remainder.
Polynomial poly_divexact_univariate(const Polynomial& f, const Polynomial& g);
// quotient/remainder division by a nonzero univariate g
std::pair<Polynomial, Polynomial> poly_divmod_univariate(const Polynomial& f,
                                                         const Polynomial& g);

}  // namespace logjet

#endif
