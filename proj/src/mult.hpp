#ifndef LOGJET_MULT_HPP
#define LOGJET_MULT_HPP

#include <optional>

#include "logalg.hpp"

namespace logjet {

// Rational point of the ambient ring's variable list.
struct RationalPoint {
  std::vector<FieldScalar> coords;

  static RationalPoint parse(const ContextPtr& ctx, const std::string& csv);
  std::string to_string() const;
};

// Effective Cartier divisor given by one local equation on an ambient
// quotient ring. Supported ambient shapes are the free ring and a single
// hypersurface; anything else is rejected rather than mishandled.
struct DivisorRep {
  Polynomial local_equation;
  RingPtr ambient;

  void validate() const;  // equation nonzero modulo the ambient ideal
};

// First nonvanishing symbolic jet coefficient: the order it appears at and
// the polynomial in the jet coefficient variables.
struct JetWitness {
  std::uint32_t order = 0;
  Polynomial coefficient;
};

// Largest n with s(x + p) having no terms below total degree n, i.e. the
// order of vanishing at p. Requires a trivial ambient ideal. nullopt
// encodes infinite multiplicity (the zero equation).
std::optional<std::uint32_t> taylor_multiplicity(const DivisorRep& d,
                                                 const RationalPoint& p);

// The jet-vanishing criterion: substitute x_j -> p_j + sum_i c_{j,i} t^i
// with symbolic coefficients and decide whether every t-coefficient up to
// order n vanishes (identically for a free ambient; modulo the arc
// constraints of the hypersurface otherwise). True iff mult_p >= n + 1.
// Throws UnsupportedError at singular points of a hypersurface ambient.
bool jet_vanishing_test(const DivisorRep& d, const RationalPoint& p,
                        std::uint32_t n, JetWitness* witness = nullptr);

struct MultiplicityResult {
  bool capped = false;      // true: every order below the cap vanished
  std::uint32_t value = 0;  // the multiplicity, or the cap when capped
  std::optional<JetWitness> witness;

  std::string to_string() const;
};

MultiplicityResult multiplicity_via_jets(const DivisorRep& d,
                                         const RationalPoint& p,
                                         std::uint32_t cap = 16);

}  // namespace logjet

#endif
