#ifndef LOGJET_MASON_HPP
#define LOGJET_MASON_HPP

#include <optional>

#include "hasse.hpp"
#include "mult.hpp"

namespace logjet {

// Everything in this module is characteristic 0: the polynomial ABC
// statements are false as stated over GF(p).

struct ConductorReport {
  Polynomial input;
  Polynomial squarefree_part;
  std::uint64_t conductor = 0;  // number of distinct roots in the closure
};

// N(f) = deg f - deg gcd(f, f'); f univariate, nonzero.
ConductorReport conductor(const Polynomial& f);

// squarefree decomposition f = prod a_i^i (Yun); index 1 entry first
std::vector<Polynomial> squarefree_decomposition(const Polynomial& f);

// largest i with a nonconstant a_i, i.e. the maximal multiplicity of any
// root of f in the algebraic closure
std::uint32_t max_root_multiplicity(const Polynomial& f);

// all rational roots of f with multiplicities (exact, via the rational
// root bound on the primitive squarefree part)
std::vector<std::pair<Rat, std::uint32_t>> rational_roots(const Polynomial& f);

struct MasonTheoremReport {
  bool preconditions_ok = false;
  std::string precondition_failure;
  std::uint64_t max_degree = 0;
  std::uint64_t conductor_fgh = 0;
  bool inequality_holds = false;  // max deg <= N(fgh) - 1

  std::string to_string() const;
};

// Mason's theorem for f + g + h = 0, pairwise coprime, not all constant.
MasonTheoremReport check_mason(const Polynomial& f, const Polynomial& g,
                               const Polynomial& h);

struct MasonCorollaryReport {
  bool preconditions_ok = false;
  std::string precondition_failure;
  std::uint64_t conductor_fg = 0;
  std::uint32_t max_multiplicity = 0;  // over every root of f+g, any closure
  bool inequality_holds = false;
  // per rational root: the root, its multiplicity, and the number of
  // initial Taylor coefficients of f and -g that agree there
  struct RootLine {
    Rat root;
    std::uint32_t multiplicity;
    std::uint32_t taylor_agreement;
  };
  std::vector<RootLine> rational_root_lines;

  std::string to_string() const;
};

// mult_p(f+g) <= N(fg) for all p; f, g coprime, not both constant.
MasonCorollaryReport check_mason_corollary(const Polynomial& f,
                                           const Polynomial& g);

// A morphism from the affine line minus finitely many points, the punctured
// locus given either by explicit removed points or by a vanishing locus
// polynomial (whose distinct roots are the removed points).
struct PuncturedLineMorphism {
  ContextPtr line;                    // univariate context of z
  Polynomial locus;                   // squarefree-counted via its conductor
  std::vector<Polynomial> images;     // one per ambient variable, in z
};

struct PullbackBoundReport {
  bool preconditions_ok = false;
  std::string precondition_failure;
  bool contained = false;  // j#(f+g) = 0: the curve lies in the divisor
  std::uint64_t bound = 0;  // N = number of removed points
  std::uint32_t max_order = 0;  // max ord_p over non-removed roots
  bool inequality_holds = false;
  std::vector<MasonCorollaryReport::RootLine> rational_root_lines;

  std::string to_string() const;
};

// ord_p j*(f+g) <= #removed points for p outside the removed locus, with
// the unit hypotheses verified on the pullbacks: the squarefree part of
// j#(f) and j#(g) must divide the squarefree locus.
PullbackBoundReport pullback_order_bound(const Polynomial& f,
                                         const Polynomial& g,
                                         const PuncturedLineMorphism& j);

// Chart gluing of Prop. projspace: for a homogeneous f of degree m > 0 on
// P^n with log structure x_n, f the forms
//   omega_i = del_1 f_i - m del_1 (x_n / x_i)
// agree on every chart overlap. corrupt_drop_term reproduces the negative
// control by omitting the m del_1(x_n/x_i) summand on the i side.
struct GluingReport {
  bool glues = false;
  std::vector<std::string> pair_lines;
  std::string to_string() const;
};

GluingReport verify_projective_gluing(const Polynomial& f_homogeneous,
                                      bool corrupt_drop_term = false);

}  // namespace logjet

#endif
