#ifndef LOGJET_INTLATTICE_HPP
#define LOGJET_INTLATTICE_HPP

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace logjet {

// Dense integer matrix with GMP entries; rows are lattice generators.
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Smith normal form: returns diag entries d_1 | d_2 | ... (nonzero ones
// first), plus optionally the rank. Transform matrices are not exposed;
// callers only need invariants and solvability.
struct SmithResult {
  std::vector<Int> diag;  // all diagonal entries, zeros included
  std::size_t rank;       // number of nonzero diagonal entries
};

SmithResult smith_normal_form(IntMat m);

// Does x lie in the row lattice of m? (Integer solvability of y * m = x.)
bool in_row_lattice(const IntMat& m, const IntVec& x);

// Basis of the sublattice of row_lattice(m) supported on the coordinate
// set `support` (indices into columns). Returned vectors are full-width.
IntMat lattice_intersect_support(const IntMat& m, std::size_t ncols,
                                 const std::vector<std::size_t>& support);

// Is there a rational (equivalently real) combination y of the rows of m
// with y*m >= 0 componentwise and (y*m)[strict_col] >= 1? Decided exactly by
// Fourier-Motzkin elimination. Scaling makes the answer equal to the integer
// lattice question "does the row lattice contain a nonnegative vector with
// positive strict_col entry".
bool lattice_has_nonneg_with(const IntMat& m, std::size_t ncols,
                             std::size_t strict_col);

// Abelian group invariants of Z^n / row_lattice(m): free rank and the
// nontrivial torsion orders.
struct AbelianInvariants {
  std::size_t free_rank;
  std::vector<Int> torsion;  // entries > 1
};

AbelianInvariants abelian_invariants(const IntMat& m, std::size_t ncols);

}  // namespace logjet

#endif
