#ifndef LOGJET_LOGALG_HPP
#define LOGJET_LOGALG_HPP

#include <memory>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "monoid.hpp"

namespace logjet {

using RingPtr = std::shared_ptr<const GroebnerContext>;

RingPtr make_ring(ContextPtr ctx, std::vector<Polynomial> ideal_gens,
                  const GroebnerLimits& limits = {});
// the coefficient field itself, as a ring with no variables
RingPtr make_scalar_ring(std::uint32_t characteristic);

// Monoid presentation together with the structure map alpha into a quotient
// ring, one polynomial image per monoid generator.
struct PreLogStructure {
  MonoidPresentation monoid;
  RingPtr ring;
  std::vector<Polynomial> alpha;

  static PreLogStructure trivial(RingPtr ring);

  // product of the alpha images with the given nonnegative exponents,
  // as an honest ring element
  Polynomial alpha_of(const IntVec& element) const;

  // alpha respects the declared relations modulo the ideal, and every
  // image is nonzero modulo the ideal
  void validate() const;
};

// Ring homomorphism between quotient rings, given on the source variables.
struct RingMorphism {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;  // per source variable, in target context

  static RingMorphism identity(RingPtr ring);
  Polynomial apply(const Polynomial& f) const;
  // source ideal maps into the target ideal
  bool well_defined(std::string* witness = nullptr) const;
};

// A log algebra over a base: structure morphism f: A -> B plus the monoid
// map f-flat, with both sides carrying pre-log structures.
struct LogAlgebraPresentation {
  PreLogStructure base;   // A
  PreLogStructure total;  // B
  RingMorphism structure_map;
  MonoidMorphism monoid_map;  // M_A -> M_B; bound to base.monoid/total.monoid

  static LogAlgebraPresentation over_scalars(PreLogStructure total);

  void bind();  // repoint monoid_map at the contained presentations
  // f(alpha_A(m)) = alpha_B(f-flat(m)) modulo the total ideal, checked on
  // generators; false reports the offending generator
  bool square_commutes(std::string* witness = nullptr) const;
};

// The universal log structure attached to a pre-log structure: the monoid
// is glued with the ring units along alpha, so element equality of pairs
// (m, u) is ring equality alpha(m) * u = alpha(m') * u', decided in the
// localization at the alpha images.
class AssociatedLog {
 public:
  static AssociatedLog build(PreLogStructure pre,
                             const GroebnerLimits& limits = {});

  const PreLogStructure& pre() const { return pre_; }
  const LocalizedContext& localization() const { return *loc_; }

  // alpha(m) * u realized in the localized ring; negative monoid exponents
  // use the adjoined inverses
  Polynomial realize(const IntVec& m, const Polynomial& unit) const;
  bool elements_equal(const IntVec& m1, const Polynomial& u1,
                      const IntVec& m2, const Polynomial& u2) const;

 private:
  AssociatedLog(PreLogStructure pre, std::shared_ptr<LocalizedContext> loc)
      : pre_(std::move(pre)), loc_(std::move(loc)) {}
  PreLogStructure pre_;
  std::shared_ptr<LocalizedContext> loc_;
};

// S^{-1} of a log algebra: total ring localized, monoid unchanged, with a
// record of which log generators became units.
struct LocalizedLogAlgebra {
  LogAlgebraPresentation original;
  std::shared_ptr<LocalizedContext> localization;
  std::vector<Polynomial> inverted;
  std::vector<bool> generator_is_unit;  // per total log generator
};

LocalizedLogAlgebra localize_log_algebra(const LogAlgebraPresentation& alg,
                                         const std::vector<Polynomial>& s,
                                         const GroebnerLimits& limits = {});

}  // namespace logjet

#endif
