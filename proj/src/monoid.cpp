#include "monoid.hpp"

#include <algorithm>

#include "groebner.hpp"  // fresh_name

namespace logjet {

MonoidPresentation MonoidPresentation::free_monoid(
    std::vector<std::string> gens) {
  MonoidPresentation m;
  m.generators = std::move(gens);
  m.integral = true;
  m.group = false;
  return m;
}

MonoidPresentation MonoidPresentation::free_group(
    std::vector<std::string> gens) {
  MonoidPresentation m;
  m.generators = std::move(gens);
  m.integral = true;
  m.group = true;
  return m;
}

MonoidPresentation MonoidPresentation::trivial() { return free_monoid({}); }

void MonoidPresentation::validate() const {
  for (const auto& [l, r] : relations) {
    if (l.size() != generators.size() || r.size() != generators.size())
      throw DomainError("monoid relation arity mismatch");
    if (!group) {
      for (const auto& e : l)
        if (e < 0) throw DomainError("negative exponent in non-group monoid");
      for (const auto& e : r)
        if (e < 0) throw DomainError("negative exponent in non-group monoid");
    }
  }
}

IntMat MonoidPresentation::relation_lattice() const {
  IntMat m;
  for (const auto& [l, r] : relations) {
    IntVec d(generators.size(), Int(0));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = l[i] - r[i];
    m.push_back(std::move(d));
  }
  return m;
}

bool MonoidPresentation::elements_equal(const IntVec& a, const IntVec& b) const {
  if (a.size() != generators.size() || b.size() != generators.size())
    throw DomainError("element arity mismatch");
  if (!integral)
    throw UnsupportedError(
        "word problem undecided for non-integral presentation");
  IntVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return in_row_lattice(relation_lattice(), d);
}

std::string MonoidPresentation::to_string() const {
  std::string s = group ? "group<" : "monoid<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i];
  }
  s += ">";
  if (!relations.empty()) {
    s += " / {";
    auto side = [&](const IntVec& v) {
      std::string t;
      bool any = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (any) t += " + ";
        if (v[i] != 1) t += v[i].get_str() + "*";
        t += generators[i];
        any = true;
      }
      return any ? t : std::string("0");
    };
    for (std::size_t k = 0; k < relations.size(); ++k) {
      if (k) s += ", ";
      s += side(relations[k].first) + " = " + side(relations[k].second);
    }
    s += "}";
  }
  return s;
}

IntVec MonoidMorphism::apply(const IntVec& x) const {
  if (!source || !target) throw DomainError("unbound morphism");
  if (x.size() != source->ngens()) throw DomainError("element arity mismatch");
  IntVec out(target->ngens(), Int(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const IntVec& img = images.at(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * img[j];
  }
  return out;
}

bool MonoidMorphism::respects_relations(std::string* failure) const {
  if (!source || !target) throw DomainError("unbound morphism");
  if (images.size() != source->ngens())
    throw DomainError("morphism image count mismatch");
  if (!target->integral) return true;  // undecidable; declared-trusted
  for (const auto& [l, r] : source->relations) {
    if (!target->elements_equal(apply(l), apply(r))) {
      if (failure) *failure = "relation not preserved in target";
      return false;
    }
  }
  return true;
}

MonoidPresentation amalgamated_sum(const MonoidPresentation& p,
                                   const MonoidPresentation& q1,
                                   const MonoidPresentation& q2,
                                   const MonoidMorphism& u1,
                                   const MonoidMorphism& u2) {
  if (!p.group && !q2.group)
    throw UnsupportedError(
        "amalgamated sum needs P or Q2 to be a group");
  if (u1.source != &p || u2.source != &p || u1.target != &q1 ||
      u2.target != &q2)
    throw DomainError("amalgamated sum: morphism endpoints do not match");

  MonoidPresentation sum;
  std::vector<std::string> names;
  for (const auto& g : q1.generators) {
    std::string n = fresh_name(names, g);
    names.push_back(n);
  }
  for (const auto& g : q2.generators) {
    std::string n = fresh_name(names, g);
    names.push_back(n);
  }
  sum.generators = names;
  sum.group = q1.group && q2.group;
  // integrality of a pushout is not automatic; only claim it in the group
  // case where the quotient-lattice description settles it
  sum.integral = sum.group;

  std::size_t n1 = q1.ngens(), n2 = q2.ngens();
  auto pad1 = [&](const IntVec& v) {
    IntVec w(n1 + n2, Int(0));
    for (std::size_t i = 0; i < n1; ++i) w[i] = v[i];
    return w;
  };
  auto pad2 = [&](const IntVec& v) {
    IntVec w(n1 + n2, Int(0));
    for (std::size_t i = 0; i < n2; ++i) w[n1 + i] = v[i];
    return w;
  };
  for (const auto& [l, r] : q1.relations)
    sum.relations.push_back({pad1(l), pad1(r)});
  for (const auto& [l, r] : q2.relations)
    sum.relations.push_back({pad2(l), pad2(r)});
  // glue: v1(u1(e_p)) = v2(u2(e_p)) for each generator of P; negative
  // entries are moved across the equality so both sides stay nonnegative
  // when the sum is not a group
  for (std::size_t k = 0; k < p.ngens(); ++k) {
    IntVec unit(p.ngens(), Int(0));
    unit[k] = 1;
    IntVec lhs = pad1(u1.apply(unit));
    IntVec rhs = pad2(u2.apply(unit));
    if (!sum.group) {
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] < 0) {
          rhs[i] -= lhs[i];
          lhs[i] = 0;
        }
        if (rhs[i] < 0) {
          lhs[i] -= rhs[i];
          rhs[i] = 0;
        }
      }
    }
    sum.relations.push_back({std::move(lhs), std::move(rhs)});
  }
  sum.validate();
  return sum;
}

MonoidMorphism amalgam_factor(const MonoidPresentation& sum,
                              const MonoidMorphism& w1,
                              const MonoidMorphism& w2) {
  if (w1.target != w2.target)
    throw DomainError("amalgam_factor: targets differ");
  std::size_t n1 = w1.source->ngens(), n2 = w2.source->ngens();
  if (sum.ngens() != n1 + n2)
    throw DomainError("amalgam_factor: sum shape mismatch");
  MonoidMorphism h;
  h.source = &sum;
  h.target = w1.target;
  for (std::size_t i = 0; i < n1; ++i) h.images.push_back(w1.images.at(i));
  for (std::size_t i = 0; i < n2; ++i) h.images.push_back(w2.images.at(i));
  return h;
}

MonoidPresentation group_of_units(const MonoidPresentation& m) {
  m.validate();
  if (!m.integral)
    throw UnsupportedError("group_of_units needs a fine presentation");
  if (m.group) return m;  // a group is its own unit group

  IntMat lattice = m.relation_lattice();
  // e_i is a unit iff the relation lattice meets the positive orthant with
  // a positive i-th coordinate
  std::vector<std::size_t> unit_gens;
  for (std::size_t i = 0; i < m.ngens(); ++i)
    if (lattice_has_nonneg_with(lattice, m.ngens(), i)) unit_gens.push_back(i);

  MonoidPresentation units;
  units.group = true;
  units.integral = true;
  for (auto i : unit_gens) units.generators.push_back(m.generators[i]);
  // relations: the relation lattice restricted to the unit coordinates
  IntMat sub = lattice_intersect_support(lattice, m.ngens(), unit_gens);
  for (const auto& v : sub) {
    IntVec l(unit_gens.size(), Int(0)), r(unit_gens.size(), Int(0));
    for (std::size_t k = 0; k < unit_gens.size(); ++k) {
      const Int& e = v[unit_gens[k]];
      if (e > 0)
        l[k] = e;
      else if (e < 0)
        r[k] = -e;
    }
    units.relations.push_back({std::move(l), std::move(r)});
  }
  return units;
}

AbelianInvariants group_invariants(const MonoidPresentation& g) {
  if (!g.group) throw DomainError("group_invariants needs a group");
  return abelian_invariants(g.relation_lattice(), g.ngens());
}

}  // namespace logjet
