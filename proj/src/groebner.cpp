#include "groebner.hpp"

#include <algorithm>
#include <limits>
#include <list>

namespace logjet {

IdealPresentation::IdealPresentation(ContextPtr c, std::vector<Polynomial> gens)
    : ctx(std::move(c)) {
  for (auto& g : gens) {
    if (!(g.context() == ctx || g.context()->same_as(*ctx)))
      throw DomainError("ideal generator context mismatch");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

namespace {

// full remainder of f on division by the polynomials in G
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
  Polynomial r(f.context());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    bool reduced = false;
    for (const auto& g : G) {
      if (!g.leading_monomial().divides(lm)) continue;
      Monomial q = lm.divide(g.leading_monomial());
      FieldScalar c = work.leading_coefficient() / g.leading_coefficient();
      work = work - g.times_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lead = Polynomial::from_terms(
          f.context(), {{work.leading_monomial(), work.leading_coefficient()}});
      r = r + lead;
      work = work - lead;
    }
  }
  return r;
}

// top-reduction only: rewrite the leading term until it is irreducible or
// the polynomial dies; tails are left alone (cheaper inside the main loop)
Polynomial top_reduce(Polynomial work, const std::vector<Polynomial>& G) {
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    bool reduced = false;
    for (const auto& g : G) {
      if (!g.leading_monomial().divides(lm)) continue;
      Monomial q = lm.divide(g.leading_monomial());
      FieldScalar c = work.leading_coefficient() / g.leading_coefficient();
      work = work - g.times_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) return work;
  }
  return work;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Monomial mf = l.divide(f.leading_monomial());
  Monomial mg = l.divide(g.leading_monomial());
  return f.times_term(mf, f.leading_coefficient().inverse()) -
         g.times_term(mg, g.leading_coefficient().inverse());
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

}  // namespace

GroebnerContext GroebnerContext::compute(IdealPresentation ideal,
                                         const GroebnerLimits& limits) {
  GroebnerContext gc(std::move(ideal));
  const auto& ctx = gc.ideal_.ctx;

  std::vector<Polynomial> G;
  std::vector<SPair> pairs;
  std::size_t pair_count = 0;

  auto sugar_of = [](const std::vector<Polynomial>& basis, const SPair& p) {
    std::uint64_t si = basis[p.i].total_degree() +
                       p.lcm.divide(basis[p.i].leading_monomial()).degree();
    std::uint64_t sj = basis[p.j].total_degree() +
                       p.lcm.divide(basis[p.j].leading_monomial()).degree();
    return std::max(si, sj);
  };

  // Gebauer-Moeller update: install the pairs of a new element t while
  // discarding pairs covered by the M, F and B criteria.
  auto update = [&](const Polynomial& h) {
    std::size_t t = G.size();
    const Monomial& lh = h.leading_monomial();
    std::vector<SPair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      SPair p;
      p.i = i;
      p.j = t;
      p.lcm = G[i].leading_monomial().lcm(lh);
      fresh.push_back(std::move(p));
    }
    // M criterion: drop (i,t) if some other new pair's lcm properly
    // divides its lcm; keep one representative of equal lcms
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (!keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) &&
            fresh[a].lcm != fresh[b].lcm) {
          keep[a] = false;
        }
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (keep[b] && fresh[a].lcm == fresh[b].lcm) keep[b] = false;
    }
    // F criterion: drop pairs with coprime leading monomials
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] &&
          G[fresh[a].i].leading_monomial().coprime(lh))
        keep[a] = false;
    // B criterion: drop old pairs whose lcm is properly covered by lh
    std::vector<SPair> surviving;
    for (auto& p : pairs) {
      const Monomial& li = G[p.i].leading_monomial();
      const Monomial& lj = G[p.j].leading_monomial();
      bool drop = lh.divides(p.lcm) && li.lcm(lh) != p.lcm &&
                  lj.lcm(lh) != p.lcm;
      if (!drop) surviving.push_back(std::move(p));
    }
    pairs = std::move(surviving);
    G.push_back(h);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      fresh[a].sugar = sugar_of(G, fresh[a]);
      pairs.push_back(std::move(fresh[a]));
      if (++pair_count > limits.max_pairs)
        throw UnsupportedError("Groebner pair limit exceeded");
    }
    if (G.size() > limits.max_basis)
      throw UnsupportedError("Groebner basis size limit exceeded");
  };

  for (const auto& g : gc.ideal_.generators) {
    Polynomial r = top_reduce(g, G);
    if (!r.is_zero()) update(r.primitive());
  }

  while (!pairs.empty()) {
    // smallest sugar first, ties broken by the smaller lcm in the ring order
    std::size_t best = 0;
    for (std::size_t it = 1; it < pairs.size(); ++it) {
      if (pairs[it].sugar < pairs[best].sugar ||
          (pairs[it].sugar == pairs[best].sugar &&
           cmp_monomial(*ctx, pairs[it].lcm, pairs[best].lcm) < 0))
        best = it;
    }
    SPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    Polynomial s = top_reduce(s_polynomial(G[p.i], G[p.j]), G);
    if (s.is_zero()) continue;
    update(s.primitive());
  }

  // minimalize, then fully reduce each tail against the others
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& lj = G[j].leading_monomial();
      const Monomial& li = G[i].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce(minimal[i], others);
    if (!r.is_zero())
      reduced.push_back(r.scaled(r.leading_coefficient().inverse()));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return cmp_monomial(*ctx, a.leading_monomial(),
                                  b.leading_monomial()) > 0;
            });
  gc.basis_ = std::move(reduced);
  return gc;
}

Polynomial GroebnerContext::normal_form(const Polynomial& f) const {
  if (!(f.context() == ideal_.ctx || f.context()->same_as(*ideal_.ctx)))
    throw DomainError("normal_form: context mismatch");
  return reduce(f, basis_);
}

bool GroebnerContext::contains(const Polynomial& f) const {
  return normal_form(f).is_zero();
}

bool GroebnerContext::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

bool GroebnerContext::is_unit_mod(const Polynomial& f,
                                  const GroebnerLimits& limits) const {
  auto gens = ideal_.generators;
  gens.push_back(f);
  auto gc =
      GroebnerContext::compute(IdealPresentation(ideal_.ctx, gens), limits);
  return gc.is_unit_ideal();
}

std::string GroebnerContext::print_basis() const {
  if (basis_.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += basis_[i].to_string();
  }
  return s + ">";
}

bool ideal_equal(const GroebnerContext& a, const GroebnerContext& b) {
  if (!(a.context() == b.context() || a.context()->same_as(*b.context())))
    throw DomainError("ideal_equal: context mismatch");
  for (const auto& g : a.basis())
    if (!b.contains(g)) return false;
  for (const auto& g : b.basis())
    if (!a.contains(g)) return false;
  return true;
}

std::string fresh_name(const std::vector<std::string>& taken,
                       const std::string& want) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(want)) return want;
  for (int i = 1;; ++i) {
    std::string cand = want + "_" + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

LocalizedContext LocalizedContext::localize(
    const GroebnerContext& base, const std::vector<Polynomial>& inverted,
    const GroebnerLimits& limits) {
  const auto& bctx = base.context();
  for (const auto& s : inverted) {
    if (base.contains(s))
      throw DomainError(
          "localization at an element of the ideal gives the zero ring: " +
          s.to_string());
  }

  std::vector<std::string> vars = bctx->vars();
  std::vector<std::string> inv_names;
  for (std::size_t k = 0; k < inverted.size(); ++k) {
    std::string n = fresh_name(vars, "u" + std::to_string(k + 1));
    inv_names.push_back(n);
    vars.push_back(n);
  }
  auto ectx = make_context(vars, bctx->order(), bctx->characteristic());

  std::vector<std::uint32_t> var_map(bctx->nvars());
  for (std::uint32_t v = 0; v < bctx->nvars(); ++v) var_map[v] = v;

  std::vector<Polynomial> gens;
  for (const auto& g : base.ideal().generators)
    gens.push_back(g.rename(ectx, var_map));
  for (std::size_t k = 0; k < inverted.size(); ++k) {
    Polynomial u = Polynomial::variable(ectx, inv_names[k]);
    gens.push_back(u * inverted[k].rename(ectx, var_map) -
                   Polynomial::constant(ectx, 1));
  }
  auto egc = GroebnerContext::compute(IdealPresentation(ectx, gens), limits);
  return LocalizedContext(base, std::move(egc), inverted, std::move(inv_names),
                          std::move(var_map));
}

Polynomial LocalizedContext::inverse_var(std::size_t k) const {
  return Polynomial::variable(extended_.context(), inverse_names_.at(k));
}

Polynomial LocalizedContext::lift(const Polynomial& f) const {
  return f.rename(extended_.context(), var_map_);
}

bool LocalizedContext::contains(const Polynomial& f_base) const {
  return extended_.contains(lift(f_base));
}

std::vector<Polynomial> eliminate_variables(
    const ContextPtr& source, const std::vector<Polynomial>& generators,
    const std::vector<std::string>& eliminate, const ContextPtr& target,
    const GroebnerLimits& limits) {
  // block order with the eliminated variables in the leading block
  std::vector<std::uint32_t> block_of(source->nvars(), 1);
  for (const auto& n : eliminate) {
    auto idx = source->index_of(n);
    if (!idx) throw DomainError("eliminate: unknown variable " + n);
    block_of[*idx] = 0;
  }
  auto elim_ctx = make_context(source->vars(), source->order(),
                               source->characteristic(), block_of);
  std::vector<std::uint32_t> id_map(source->nvars());
  for (std::uint32_t v = 0; v < source->nvars(); ++v) id_map[v] = v;

  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(g.rename(elim_ctx, id_map));
  auto gb = GroebnerContext::compute(IdealPresentation(elim_ctx, gens), limits);

  std::vector<std::uint32_t> keep_map(
      source->nvars(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t v = 0; v < source->nvars(); ++v) {
    if (block_of[v] == 0) continue;
    auto idx = target->index_of(source->name_of(v));
    if (!idx)
      throw DomainError("eliminate: target lacks variable " +
                        source->name_of(v));
    keep_map[v] = *idx;
  }

  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    bool uses_eliminated = false;
    for (const auto& [m, c] : g.terms())
      for (const auto& [v, e] : m.exps())
        if (block_of[v] == 0) uses_eliminated = true;
    if (!uses_eliminated) out.push_back(g.rename(target, keep_map));
  }
  return out;
}

}  // namespace logjet
