#ifndef LOGJET_MONOID_HPP
#define LOGJET_MONOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "intlattice.hpp"

namespace logjet {

// Finitely generated commutative monoid, additively written: generators by
// name, relations as pairs of exponent vectors lhs = rhs. Entries must be
// nonnegative unless the group flag is set, in which case elements live in
// the quotient of Z^n by the relation lattice.
//
// The integral flag is a declaration, not a verified property: deciding
// integrality of an arbitrary presentation is out of reach. For integral
// presentations the word problem is settled by lattice membership of the
// difference vector.
struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<IntVec, IntVec>> relations;
  bool integral = true;
  bool group = false;

  static MonoidPresentation free_monoid(std::vector<std::string> gens);
  static MonoidPresentation free_group(std::vector<std::string> gens);
  static MonoidPresentation trivial();

  void validate() const;
  std::size_t ngens() const { return generators.size(); }
  // rows spanning the lattice generated by lhs - rhs
  IntMat relation_lattice() const;

  // Word problem for integral presentations; throws UnsupportedError
  // otherwise.
  bool elements_equal(const IntVec& a, const IntVec& b) const;

  std::string to_string() const;
};

struct MonoidMorphism {
  const MonoidPresentation* source = nullptr;
  const MonoidPresentation* target = nullptr;
  // image of each source generator as an exponent vector in the target
  std::vector<IntVec> images;

  IntVec apply(const IntVec& x) const;
  // Checks every source relation maps to an equality in the target. For
  // non-integral targets the check is skipped (word problem undecided).
  bool respects_relations(std::string* failure = nullptr) const;
};

// Pushout Q1 <- P -> Q2. Requires P or Q2 to be a group. Generators are
// Q1's followed by Q2's; the gluing relations identify u1(p) with u2(p).
MonoidPresentation amalgamated_sum(const MonoidPresentation& p,
                                   const MonoidPresentation& q1,
                                   const MonoidPresentation& q2,
                                   const MonoidMorphism& u1,
                                   const MonoidMorphism& u2);

// The canonical factoring morphism out of an amalgamated sum given a
// commuting cone (w1, w2): (q1, q2) -> w1(q1) + w2(q2).
MonoidMorphism amalgam_factor(const MonoidPresentation& sum,
                              const MonoidMorphism& w1,
                              const MonoidMorphism& w2);

// Unit group of a fine presentation, via the relation lattice: a generator
// contributes to the units iff the lattice contains a nonnegative vector
// positive at it; the subgroup structure is read off with Smith normal form.
MonoidPresentation group_of_units(const MonoidPresentation& m);

// Free rank and torsion of a group presentation.
AbelianInvariants group_invariants(const MonoidPresentation& g);

}  // namespace logjet

#endif
