#ifndef LOGJET_GROEBNER_HPP
#define LOGJET_GROEBNER_HPP

#include <string>
#include <vector>

#include "poly.hpp"

namespace logjet {

// Generating set of an ideal; generators are nonzero and share a context.
struct IdealPresentation {
  ContextPtr ctx;
  std::vector<Polynomial> generators;

  IdealPresentation(ContextPtr c, std::vector<Polynomial> gens);
};

// Resource guard for Buchberger runs; the defaults are far beyond anything
// the shipped examples need.
struct GroebnerLimits {
  std::size_t max_basis = 4096;
  std::size_t max_pairs = 2000000;
};

// An ideal together with its reduced Groebner basis. Immutable; all queries
// are pure. The reduced basis is monic, auto-reduced, and sorted by
// descending leading monomial, so printing it is deterministic.
class GroebnerContext {
 public:
  static GroebnerContext compute(IdealPresentation ideal,
                                 const GroebnerLimits& limits = {});

  const ContextPtr& context() const { return ideal_.ctx; }
  const IdealPresentation& ideal() const { return ideal_; }
  const std::vector<Polynomial>& basis() const { return basis_; }

  // Fully reduced remainder; normal_form(f) == normal_form(g) iff f - g
  // lies in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool is_unit_ideal() const;

  // True iff f is invertible modulo the ideal, i.e. 1 lies in ideal + <f>.
  bool is_unit_mod(const Polynomial& f, const GroebnerLimits& limits = {}) const;

  std::string print_basis() const;

 private:
  explicit GroebnerContext(IdealPresentation ideal)
      : ideal_(std::move(ideal)) {}
  IdealPresentation ideal_;
  std::vector<Polynomial> basis_;
};

bool ideal_equal(const GroebnerContext& a, const GroebnerContext& b);

// S^{-1}(B/I) realized by adjoining an inverse variable per inverted
// element: extended ideal = base ideal + { u_k * s_k - 1 }. Normal forms in
// the extension decide equality in the localization.
class LocalizedContext {
 public:
  // Throws DomainError if some s reduces to 0 modulo the base ideal.
  static LocalizedContext localize(const GroebnerContext& base,
                                   const std::vector<Polynomial>& inverted,
                                   const GroebnerLimits& limits = {});

  const GroebnerContext& base() const { return base_; }
  const GroebnerContext& extended() const { return extended_; }
  const std::vector<Polynomial>& inverted() const { return inverted_; }

  // Name and polynomial of the inverse adjoined for inverted()[k].
  const std::string& inverse_name(std::size_t k) const {
    return inverse_names_.at(k);
  }
  Polynomial inverse_var(std::size_t k) const;

  // Lift of a base-context polynomial into the extended context.
  Polynomial lift(const Polynomial& f) const;
  bool contains(const Polynomial& f_base) const;

 private:
  LocalizedContext(GroebnerContext base, GroebnerContext extended,
                   std::vector<Polynomial> inverted,
                   std::vector<std::string> inverse_names,
                   std::vector<std::uint32_t> var_map)
      : base_(std::move(base)),
        extended_(std::move(extended)),
        inverted_(std::move(inverted)),
        inverse_names_(std::move(inverse_names)),
        var_map_(std::move(var_map)) {}

  GroebnerContext base_;
  GroebnerContext extended_;
  std::vector<Polynomial> inverted_;
  std::vector<std::string> inverse_names_;
  std::vector<std::uint32_t> var_map_;  // base var index -> extended var index
};

// Fresh name derived from `want` that does not collide with `taken`.
std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& want);

// Contraction: compute a generating set of (ideal ∩ k[keep onto]) where the
// input ideal lives in a context whose variables are split into eliminated
// ones and kept ones. Returns generators expressed in `target`, which must
// list exactly the kept variables (same names, same characteristic).
std::vector<Polynomial> eliminate_variables(
    const ContextPtr& source, const std::vector<Polynomial>& generators,
    const std::vector<std::string>& eliminate, const ContextPtr& target,
    const GroebnerLimits& limits = {});

}  // namespace logjet

#endif
