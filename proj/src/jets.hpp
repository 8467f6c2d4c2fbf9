#ifndef LOGJET_JETS_HPP
#define LOGJET_JETS_HPP

#include "hasse.hpp"

namespace logjet {

// Element of the truncated-unit monoid over a pre-log structure: a monoid
// part, an explicit unit factor, and the higher slots r_1..r_n. Realizes to
// alpha(m) * unit * (1 + r_1 t + ... + r_n t^n).
struct TruncatedLogUnit {
  const PreLogStructure* prelog = nullptr;
  IntVec monoid_part;            // exponents over prelog's generators
  Polynomial unit;               // invertible factor, often the constant 1
  std::vector<Polynomial> tail;  // r_1..r_n

  std::uint32_t order() const { return static_cast<std::uint32_t>(tail.size()); }
  TruncatedPoly alpha_hat() const;

  static TruncatedLogUnit identity(const PreLogStructure& prelog,
                                   std::uint32_t order);
};

// Monoid law: monoid parts add, units multiply, tails convolve with the
// implicit slot r_0 = q_0 = 1.
TruncatedLogUnit log_unit_mul(const TruncatedLogUnit& a,
                              const TruncatedLogUnit& b);

// A morphism B -> R[t]/t^{n+1} of log algebras, given on generators: one
// jet per total ring variable and one truncated log unit per log generator.
struct JetMorphismData {
  const LogAlgebraPresentation* alg = nullptr;
  RingPtr target;  // R as a quotient ring; jets are truncated polys over it
  std::uint32_t order = 0;
  std::vector<TruncatedPoly> ring_images;
  std::vector<TruncatedLogUnit> log_images;

  // ideal generators map to zero and the log images are alpha-compatible;
  // reports the offending generator on failure
  bool validate(std::string* witness = nullptr) const;

  TruncatedPoly substitute_ring(const Polynomial& b) const;
};

// The equivalent packaging as maps: D_0..D_n on the ring and delta_0..delta_n
// on the log generators (delta_0 is identically 1 for honest derivations;
// it is stored so corrupted data can be represented and caught).
struct HigherLogDerivation {
  const LogAlgebraPresentation* alg = nullptr;
  RingPtr target;
  std::uint32_t order = 0;
  std::vector<TruncatedPoly> d_values;         // per ring variable
  std::vector<std::vector<Polynomial>> delta;  // per log generator, 0..n

  TruncatedPoly apply_D(const Polynomial& b) const;
  // delta_i of a monoid element, by the divided convolution law
  std::vector<Polynomial> apply_delta(const IntVec& m) const;
};

HigherLogDerivation jet_to_derivation(const JetMorphismData& jet);

struct AxiomCheck {
  std::string axiom;
  bool pass;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Conditions i-v of a higher log derivation, checked on random ring and
// monoid elements built from the generators.
AxiomReport check_derivation_axioms(const HigherLogDerivation& d,
                                    std::uint64_t seed, int trials);

// The universal factoring: evaluate an HS-presentation element at the
// symbol values induced by a jet (d_i x_j and del_i m_k go to the jet's
// coefficients), landing in the jet's target ring.
Polynomial evaluate_hs_element(const HSPresentation& hs, const Polynomial& e,
                               const JetMorphismData& jet);

}  // namespace logjet

#endif
