#include "mason.hpp"

#include <algorithm>
#include <map>

namespace logjet {

namespace {

void require_char0(const Polynomial& f, const char* who) {
  if (f.context()->characteristic() != 0)
    throw UnsupportedError(std::string(who) +
                           ": positive characteristic is not supported (the "
                           "statement fails there)");
}

std::uint32_t the_variable(const Polynomial& f) {
  std::uint32_t v = 0;
  if (!is_univariate(f, &v))
    throw DomainError("univariate polynomial required");
  return v;
}

Polynomial shift_by(const Polynomial& f, std::uint32_t var, const Rat& r) {
  const auto& ctx = f.context();
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v) {
    Polynomial img = Polynomial::variable(ctx, ctx->name_of(v));
    if (v == var)
      img = img + Polynomial::constant(ctx, FieldScalar::rational(r));
    images.insert({ctx->name_of(v), TruncatedPoly::constant(ctx, 0, img)});
  }
  return substitute(f, images).coeff(0);
}

// trial-division factorization; good for the desk-scale constants that
// appear in the shipped suites
std::vector<std::pair<Int, unsigned>> factor_int(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int d(2); d * d <= n && d < 1000000; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0)
      throw UnsupportedError(
          "rational-root scan: coefficient too large to factor: " +
          n.get_str());
    out.push_back({n, 1});
  }
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factor_int(n)) {
    std::size_t sz = out.size();
    Int pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

ConductorReport conductor(const Polynomial& f) {
  require_char0(f, "conductor");
  if (f.is_zero()) throw DomainError("conductor of the zero polynomial");
  std::uint32_t v = the_variable(f);
  ConductorReport rep;
  rep.input = f;
  if (f.is_constant()) {
    rep.squarefree_part = Polynomial::constant(f.context(), 1);
    rep.conductor = 0;
    return rep;
  }
  Polynomial d = poly_gcd_univariate(f, f.derivative(v));
  rep.squarefree_part = poly_divexact_univariate(f, d).primitive();
  rep.conductor = f.total_degree() - d.total_degree();
  return rep;
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& f) {
  require_char0(f, "squarefree decomposition");
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<Polynomial> out;
  if (f.is_constant()) return out;
  std::uint32_t v = the_variable(f);
  Polynomial d = poly_gcd_univariate(f, f.derivative(v));
  Polynomial b = poly_divexact_univariate(f, d);
  Polynomial c = poly_divexact_univariate(f.derivative(v), d);
  Polynomial w = c - b.derivative(v);
  while (!b.is_constant()) {
    Polynomial a = poly_gcd_univariate(b, w);
    out.push_back(a);
    b = poly_divexact_univariate(b, a);
    c = poly_divexact_univariate(w, a);
    w = c - b.derivative(v);
  }
  return out;
}

std::uint32_t max_root_multiplicity(const Polynomial& f) {
  auto dec = squarefree_decomposition(f);
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < dec.size(); ++i)
    if (!dec[i].is_constant()) m = static_cast<std::uint32_t>(i + 1);
  return m;
}

std::vector<std::pair<Rat, std::uint32_t>> rational_roots(const Polynomial& f) {
  require_char0(f, "rational roots");
  std::vector<std::pair<Rat, std::uint32_t>> out;
  if (f.is_zero() || f.is_constant()) return out;
  std::uint32_t v = the_variable(f);
  auto dec = squarefree_decomposition(f);
  for (std::size_t idx = 0; idx < dec.size(); ++idx) {
    Polynomial a = dec[idx].primitive();
    if (a.is_constant()) continue;
    std::uint32_t mult = static_cast<std::uint32_t>(idx + 1);
    // strip the root at zero
    std::uint64_t zmult = a.total_degree();
    for (const auto& [m, c] : a.terms())
      zmult = std::min<std::uint64_t>(zmult, m.exponent_of(v));
    if (zmult > 0) {
      out.push_back({Rat(0), mult});
      a = poly_divexact_univariate(
          a, Polynomial::from_terms(
                 a.context(),
                 {{Monomial::var(v, static_cast<std::uint32_t>(zmult)),
                   FieldScalar::one(0)}}));
    }
    if (a.is_constant()) continue;
    Int lead = a.leading_coefficient().rat().get_num();
    Int tail = a.constant_term().rat().get_num();
    for (const auto& p : divisors(tail))
      for (const auto& q : divisors(lead)) {
        for (int sign = 0; sign < 2; ++sign) {
          Rat cand(sign ? -p : p, q);
          cand.canonicalize();
          std::vector<FieldScalar> point(a.context()->nvars(),
                                         FieldScalar::rational(0));
          point[v] = FieldScalar::rational(cand);
          if (a.evaluate(point).is_zero()) {
            bool seen = false;
            for (const auto& [r, m] : out)
              if (r == cand) seen = true;
            if (!seen) out.push_back({cand, mult});
          }
        }
      }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

namespace {

// number of initial Taylor coefficients of f and g agreeing at r
std::uint32_t taylor_agreement_at(const Polynomial& f, const Polynomial& g,
                                  std::uint32_t var, const Rat& r) {
  Polynomial fs = shift_by(f, var, r);
  Polynomial gs = shift_by(g, var, r);
  std::uint64_t limit =
      std::max(fs.total_degree(), gs.total_degree()) + 1;
  for (std::uint32_t k = 0; k < limit; ++k) {
    Monomial zk = Monomial::var(var, k);
    if (fs.coefficient_of(zk) != gs.coefficient_of(zk)) return k;
  }
  return static_cast<std::uint32_t>(limit);
}

bool coprime_univariate(const Polynomial& f, const Polynomial& g) {
  return poly_gcd_univariate(f, g).is_constant();
}

}  // namespace

std::string MasonTheoremReport::to_string() const {
  if (!preconditions_ok) return "rejected: " + precondition_failure;
  return "max_deg = " + std::to_string(max_degree) +
         ", N(fgh) = " + std::to_string(conductor_fgh) +
         (inequality_holds ? " : max_deg <= N - 1 holds"
                           : " : INEQUALITY VIOLATED");
}

MasonTheoremReport check_mason(const Polynomial& f, const Polynomial& g,
                               const Polynomial& h) {
  require_char0(f, "Mason theorem");
  MasonTheoremReport rep;
  if (f.is_zero() || g.is_zero() || h.is_zero()) {
    rep.precondition_failure = "zero polynomial among f, g, h";
    return rep;
  }
  if (!(f + g + h).is_zero()) {
    rep.precondition_failure = "f + g + h != 0";
    return rep;
  }
  if (f.is_constant() && g.is_constant() && h.is_constant()) {
    rep.precondition_failure = "all three polynomials constant";
    return rep;
  }
  if (!coprime_univariate(f, g) || !coprime_univariate(f, h) ||
      !coprime_univariate(g, h)) {
    rep.precondition_failure = "not pairwise coprime";
    return rep;
  }
  rep.preconditions_ok = true;
  rep.max_degree =
      std::max({f.total_degree(), g.total_degree(), h.total_degree()});
  rep.conductor_fgh = conductor(f * g * h).conductor;
  rep.inequality_holds = rep.max_degree + 1 <= rep.conductor_fgh;
  return rep;
}

std::string MasonCorollaryReport::to_string() const {
  if (!preconditions_ok) return "rejected: " + precondition_failure;
  std::string s = "max mult = " + std::to_string(max_multiplicity) +
                  ", N(fg) = " + std::to_string(conductor_fg) +
                  (inequality_holds ? " : mult <= N holds" : " : VIOLATED");
  for (const auto& line : rational_root_lines)
    s += "; root " + line.root.get_str() + " mult " +
         std::to_string(line.multiplicity) + " taylor " +
         std::to_string(line.taylor_agreement);
  return s;
}

MasonCorollaryReport check_mason_corollary(const Polynomial& f,
                                           const Polynomial& g) {
  require_char0(f, "Mason corollary");
  MasonCorollaryReport rep;
  if (f.is_zero() || g.is_zero()) {
    rep.precondition_failure = "zero polynomial";
    return rep;
  }
  if (f.is_constant() && g.is_constant()) {
    rep.precondition_failure = "both polynomials constant";
    return rep;
  }
  if (!coprime_univariate(f, g)) {
    rep.precondition_failure = "f and g share a factor";
    return rep;
  }
  Polynomial h = f + g;
  if (h.is_zero()) {
    rep.precondition_failure = "f + g = 0 (coprimality already fails)";
    return rep;
  }
  rep.preconditions_ok = true;
  rep.conductor_fg = conductor(f * g).conductor;
  rep.max_multiplicity = h.is_constant() ? 0 : max_root_multiplicity(h);
  rep.inequality_holds = rep.max_multiplicity <= rep.conductor_fg;

  if (!h.is_constant()) {
    std::uint32_t var = the_variable(h);
    for (const auto& [root, mult] : rational_roots(h)) {
      MasonCorollaryReport::RootLine line;
      line.root = root;
      line.multiplicity = mult;
      line.taylor_agreement = taylor_agreement_at(f, -g, var, root);
      rep.rational_root_lines.push_back(line);
    }
  }
  return rep;
}

std::string PullbackBoundReport::to_string() const {
  if (!preconditions_ok) return "rejected: " + precondition_failure;
  if (contained) return "j(C) lies in the divisor (pullback is zero)";
  std::string s = "max ord = " + std::to_string(max_order) +
                  ", N = " + std::to_string(bound) +
                  (inequality_holds ? " : ord <= N holds" : " : VIOLATED");
  for (const auto& line : rational_root_lines)
    s += "; root " + line.root.get_str() + " ord " +
         std::to_string(line.multiplicity);
  return s;
}

PullbackBoundReport pullback_order_bound(const Polynomial& f,
                                         const Polynomial& g,
                                         const PuncturedLineMorphism& j) {
  require_char0(f, "pullback bound");
  PullbackBoundReport rep;
  const auto& actx = f.context();
  if (j.images.size() != actx->nvars()) {
    rep.precondition_failure = "one image per ambient variable required";
    return rep;
  }
  if (j.locus.is_zero()) {
    rep.precondition_failure = "zero locus polynomial";
    return rep;
  }
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < actx->nvars(); ++v)
    images.insert({actx->name_of(v),
                   TruncatedPoly::constant(j.line, 0, j.images[v])});
  Polynomial jf = substitute(f, images).coeff(0);
  Polynomial jg = substitute(g, images).coeff(0);

  ConductorReport locus_rep = conductor(j.locus);
  rep.bound = locus_rep.conductor;

  // unit witnesses: the pullbacks may only vanish on the removed locus
  for (const auto& [name, pullback] :
       std::vector<std::pair<std::string, const Polynomial*>>{{"f", &jf},
                                                              {"g", &jg}}) {
    if (pullback->is_zero()) {
      rep.precondition_failure = "pullback of " + name + " vanishes";
      return rep;
    }
    if (pullback->is_constant()) continue;
    Polynomial sf = conductor(*pullback).squarefree_part;
    auto [q, r] = poly_divmod_univariate(locus_rep.squarefree_part, sf);
    if (!r.is_zero()) {
      rep.precondition_failure =
          "pullback of " + name + " is not a unit off the removed points";
      return rep;
    }
  }
  rep.preconditions_ok = true;

  Polynomial h = jf + jg;
  if (h.is_zero()) {
    rep.contained = true;
    rep.inequality_holds = true;
    return rep;
  }

  if (!h.is_constant()) {
    std::uint32_t var = the_variable(h);
    // closure-level bound: a Yun factor with a root outside the removed
    // locus contributes its index
    auto dec = squarefree_decomposition(h);
    for (std::size_t i = 0; i < dec.size(); ++i) {
      if (dec[i].is_constant()) continue;
      Polynomial shared = poly_gcd_univariate(dec[i], locus_rep.squarefree_part);
      if (shared.total_degree() < dec[i].total_degree())
        rep.max_order = static_cast<std::uint32_t>(i + 1);
    }
    for (const auto& [root, mult] : rational_roots(h)) {
      std::vector<FieldScalar> pt(j.line->nvars(), FieldScalar::rational(0));
      pt[the_variable(j.locus)] = FieldScalar::rational(root);
      if (j.locus.evaluate(pt).is_zero()) continue;  // removed point
      MasonCorollaryReport::RootLine line;
      line.root = root;
      line.multiplicity = mult;
      line.taylor_agreement = taylor_agreement_at(jf, -jg, var, root);
      rep.rational_root_lines.push_back(line);
    }
  }
  rep.inequality_holds = rep.max_order <= rep.bound;
  return rep;
}

std::string GluingReport::to_string() const {
  std::string s = glues ? "all chart overlaps glue" : "gluing FAILS";
  for (const auto& line : pair_lines) s += "\n" + line;
  return s;
}

GluingReport verify_projective_gluing(const Polynomial& f_homogeneous,
                                      bool corrupt_drop_term) {
  require_char0(f_homogeneous, "projective gluing");
  const auto& pctx = f_homogeneous.context();
  const std::size_t nv = pctx->nvars();
  if (nv < 2) throw DomainError("need at least two homogeneous coordinates");
  if (f_homogeneous.is_zero()) throw DomainError("zero polynomial");
  std::uint64_t m = f_homogeneous.total_degree();
  for (const auto& [mono, c] : f_homogeneous.terms())
    if (mono.degree() != m)
      throw DomainError("polynomial is not homogeneous");
  if (m == 0) throw DomainError("degree must be positive");

  GluingReport rep;
  rep.glues = true;
  const std::size_t last = nv - 1;  // index of x_n

  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t jc = i + 1; jc < nv; ++jc) {
      // chart V_i with coordinates a_l = x_l / x_i (l != i), overlap with
      // V_j: everything happens in the order-1 jet ring of the chart
      // localized at f_i, a_j and a_n
      std::vector<std::string> avars;
      for (std::size_t l = 0; l < nv; ++l)
        if (l != i) avars.push_back(pctx->name_of(static_cast<std::uint32_t>(l)));
      std::string uf = fresh_name(avars, "invf");
      std::string uj = fresh_name(avars, "invj");
      std::string un = fresh_name(avars, "invn");
      std::vector<std::string> vars = avars;
      vars.push_back(uf);
      vars.push_back(uj);
      bool need_un = i != last && jc != last;
      if (need_un) vars.push_back(un);
      auto cctx = make_context(vars, OrderKind::grevlex, 0);

      // dehomogenize f on chart i
      std::map<std::string, TruncatedPoly> deho;
      for (std::size_t l = 0; l < nv; ++l) {
        Polynomial img = l == i ? Polynomial::constant(cctx, 1)
                                : Polynomial::variable(
                                      cctx, pctx->name_of(
                                                static_cast<std::uint32_t>(l)));
        deho.insert({pctx->name_of(static_cast<std::uint32_t>(l)),
                     TruncatedPoly::constant(cctx, 0, img)});
      }
      Polynomial fi = substitute(f_homogeneous, deho).coeff(0);
      Polynomial aj = Polynomial::variable(
          cctx, pctx->name_of(static_cast<std::uint32_t>(jc)));
      Polynomial an = i == last
                          ? Polynomial::constant(cctx, 1)
                          : Polynomial::variable(
                                cctx, pctx->name_of(
                                          static_cast<std::uint32_t>(last)));
      Polynomial ufp = Polynomial::variable(cctx, uf);
      Polynomial ujp = Polynomial::variable(cctx, uj);
      Polynomial unp = need_un ? Polynomial::variable(cctx, un)
                               : (jc == last ? ujp : Polynomial::constant(cctx, 1));

      std::vector<Polynomial> rels{ufp * fi - Polynomial::constant(cctx, 1),
                                   ujp * aj - Polynomial::constant(cctx, 1)};
      if (need_un)
        rels.push_back(unp * an - Polynomial::constant(cctx, 1));

      auto chart = LogAlgebraPresentation::over_scalars(
          PreLogStructure::trivial(make_ring(cctx, rels)));
      auto hs1 = HSPresentation::build(chart, 1);
      auto lift = [&](const Polynomial& p) {
        std::vector<std::uint32_t> mapidx(cctx->nvars());
        for (std::uint32_t v = 0; v < cctx->nvars(); ++v)
          mapidx[v] = *hs1.symbol_context()->index_of(cctx->name_of(v));
        return p.rename(hs1.symbol_context(), mapidx);
      };
      auto d1 = [&](const Polynomial& p) { return hs1.prolong(p, 1); };
      auto mconst = [&](std::uint64_t k) {
        return Polynomial::constant(hs1.symbol_context(),
                                    static_cast<long>(k));
      };

      // omega_i = del_1(f_i) - m del_1(x_n/x_i)
      Polynomial omega_i = lift(ufp) * d1(fi);
      if (i != last && !corrupt_drop_term)
        omega_i = omega_i - mconst(m) * lift(unp) * d1(an);

      // omega_j pulled to chart i: f_j = f_i u_j^m, x_n/x_j = a_n u_j
      Polynomial theta = fi * ujp.pow(static_cast<std::uint32_t>(m));
      Polynomial theta_inv = ufp * aj.pow(static_cast<std::uint32_t>(m));
      Polynomial omega_j = lift(theta_inv) * d1(theta);
      if (jc != last) {
        Polynomial eta = an * ujp;
        Polynomial eta_inv = unp * aj;
        omega_j = omega_j - mconst(m) * lift(eta_inv) * d1(eta);
      }

      bool ok = hs1.ring()->contains(omega_i - omega_j);
      rep.pair_lines.push_back("charts (" + std::to_string(i) + "," +
                               std::to_string(jc) + "): " +
                               (ok ? "agree" : "DIFFER"));
      if (!ok) rep.glues = false;
    }
  }
  return rep;
}

}  // namespace logjet
