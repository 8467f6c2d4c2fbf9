#ifndef LOGJET_HASSE_HPP
#define LOGJET_HASSE_HPP

#include <memory>
#include <string>
#include <vector>

#include "logalg.hpp"

namespace logjet {

// Degree-1 graded part of an order-1 presentation, as a module presentation
// over the weight-0 quotient ring.
struct OmegaPresentation {
  std::vector<std::string> generators;  // weight-1 symbol names
  // one row per relation: coefficient polynomial (in the base ring) per
  // generator
  std::vector<std::vector<Polynomial>> relations;
  RingPtr coefficient_ring;

  // generators minus the rank of the relation matrix over the fraction
  // field of the (assumed integral) coefficient ring
  std::size_t rank() const;
  std::string to_string() const;
};

// Order-n log Hasse-Schmidt ring of a finitely presented log algebra, as an
// explicit quotient presentation in the prolongation symbols d_i x_j and the
// log partials del_i m_k.
//
// Two construction modes:
//  - strict: the partial-symbol relations come only from the declared data
//    (the alpha relations d_i a(m) = a(m) del_i m plus the declared monoid
//    relations expanded by the divided convolution law). This is the
//    pushforward log structure of a strict quotient.
//  - embedded: the ring is presented as the subring of the localization at
//    the alpha images generated by x, d x and u_k d(alpha), with the
//    partial-symbol ideal obtained as an elimination kernel. This is the
//    submonoid log structure and needs the ambient quotient to be an
//    integral domain with injective alpha, which is declared, not verified.
class HSPresentation {
 public:
  struct BuildOptions {
    bool embedded = false;
    std::uint32_t order_cap = 5;
    GroebnerLimits limits;
  };

  static HSPresentation build(LogAlgebraPresentation alg, std::uint32_t n,
                              BuildOptions opts);
  static HSPresentation build(LogAlgebraPresentation alg, std::uint32_t n) {
    return build(std::move(alg), n, BuildOptions{});
  }

  std::uint32_t order() const { return order_; }
  bool embedded() const { return embedded_; }
  const LogAlgebraPresentation& algebra() const { return alg_; }
  const ContextPtr& symbol_context() const { return hs_ctx_; }
  const RingPtr& ring() const { return ring_; }

  std::size_t ring_generators() const;  // #variables of the total ring
  std::size_t log_generators() const;

  // symbol names and polynomials; i = 0 gives the variable itself (for d)
  // or the constant 1 (for del)
  const std::string& d_name(std::size_t var, std::uint32_t i) const;
  const std::string& del_name(std::size_t gen, std::uint32_t i) const;
  Polynomial d_symbol(std::size_t var, std::uint32_t i) const;
  Polynomial del_symbol(std::size_t gen, std::uint32_t i) const;

  // weight grading: weight(x_j) = 0, weight(d_i _) = weight(del_i _) = i
  std::uint64_t weight_of(const Monomial& m) const;
  bool is_homogeneous(const Polynomial& p, std::uint64_t* weight = nullptr) const;
  bool ideal_is_homogeneous() const;

  // divided prolongation: d_i f as a polynomial in the symbols, computed as
  // the t^i coefficient of f(x_j -> sum_k d_k x_j t^k)
  Polynomial prolong(const Polynomial& f_total, std::uint32_t i) const;
  TruncatedPoly prolong_series(const Polynomial& f_total) const;
  // same for a monoid element: t^i coefficient of prod_k (1 + sum del t)^w
  Polynomial partial_of_element(const IntVec& w, std::uint32_t i) const;

  // the operator d into the order-(n+1) presentation of the same algebra
  Polynomial apply_d(const Polynomial& e, const HSPresentation& next) const;

  // localized embedding: the d-only ring localized at the alpha images
  const LocalizedContext& localized_embedding() const { return *loc_; }
  // u_k * d_i(alpha_k), the realization of del_i m_k; i >= 1
  const Polynomial& log_partial(std::size_t gen, std::uint32_t i) const;
  // image of an arbitrary element under del -> u * d(alpha)
  Polynomial to_localized(const Polynomial& e) const;

  OmegaPresentation omega() const;  // order 1 only

  std::string print() const;

 private:
  HSPresentation() = default;

  LogAlgebraPresentation alg_;
  std::uint32_t order_ = 0;
  bool embedded_ = false;
  ContextPtr hs_ctx_;
  RingPtr ring_;
  std::vector<std::vector<std::string>> d_names_;
  std::vector<std::vector<std::string>> del_names_;
  std::vector<std::uint32_t> weight_;  // per hs_ctx_ variable

  ContextPtr d_ctx_;  // x and d symbols only
  RingPtr d_ring_;
  std::shared_ptr<LocalizedContext> loc_;
  std::vector<std::vector<Polynomial>> del_realized_;  // [gen][i-1]
};

// Well-definedness of d: apply_d of every ideal generator of `at` reduces
// to zero in `next`. Returns the offending generator if not.
bool check_d_well_defined(const HSPresentation& at, const HSPresentation& next,
                          std::string* witness = nullptr);

struct GenerationStepReport {
  bool char_regime = false;  // characteristic divides n + 1
  bool holds = true;
  std::string detail;
};

// The generation identities behind passing from order n to order n + 1:
// (n+1) d_{n+1} b = d(d_n b) and the del analogue, checked modulo the
// order-(n+1) ideal on generators, pairwise products and ideal generators.
GenerationStepReport check_generation_step(const LogAlgebraPresentation& alg, std::uint32_t n,
                            HSPresentation::BuildOptions opts =
                                HSPresentation::BuildOptions());

struct ExactSequenceReport {
  bool exact = false;
  std::string detail;
};

// Second fundamental exact sequence for a strict surjection B -> B/kernel:
// the order-n ideal of the quotient equals the order-n ideal of B plus the
// prolongations of the kernel generators.
ExactSequenceReport check_second_exact_sequence(
    const LogAlgebraPresentation& b_alg, const std::vector<Polynomial>& kernel,
    std::uint32_t n,
    HSPresentation::BuildOptions opts = HSPresentation::BuildOptions());

// First fundamental exact sequence for A -> B -> C with A the scalars:
// the order-n ideal of C over B equals the ideal of C over A plus the
// prolongations of the images of B's variables.
ExactSequenceReport check_first_exact_sequence(
    const LogAlgebraPresentation& c_over_a, const RingMorphism& b_to_c,
    std::uint32_t n,
    HSPresentation::BuildOptions opts = HSPresentation::BuildOptions());

}  // namespace logjet

#endif
