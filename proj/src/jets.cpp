#include "jets.hpp"

#include <map>

namespace logjet {

TruncatedPoly TruncatedLogUnit::alpha_hat() const {
  if (!prelog) throw DomainError("unbound truncated log unit");
  const auto& ctx = prelog->ring->context();
  TruncatedPoly series(ctx, order());
  series.coeff(0) = Polynomial::constant(ctx, 1);
  for (std::uint32_t i = 1; i <= order(); ++i) series.coeff(i) = tail[i - 1];
  Polynomial head = prelog->alpha_of(monoid_part) * unit;
  return series * TruncatedPoly::constant(ctx, order(), head);
}

TruncatedLogUnit TruncatedLogUnit::identity(const PreLogStructure& prelog,
                                            std::uint32_t order) {
  TruncatedLogUnit u;
  u.prelog = &prelog;
  u.monoid_part.assign(prelog.monoid.ngens(), Int(0));
  u.unit = Polynomial::constant(prelog.ring->context(), 1);
  u.tail.assign(order, Polynomial(prelog.ring->context()));
  return u;
}

TruncatedLogUnit log_unit_mul(const TruncatedLogUnit& a,
                              const TruncatedLogUnit& b) {
  if (a.prelog != b.prelog)
    throw DomainError("log unit multiplication across structures");
  if (a.order() != b.order())
    throw DomainError("log unit order mismatch: " + std::to_string(a.order()) +
                      " vs " + std::to_string(b.order()));
  TruncatedLogUnit r;
  r.prelog = a.prelog;
  r.monoid_part.resize(a.monoid_part.size());
  for (std::size_t i = 0; i < a.monoid_part.size(); ++i)
    r.monoid_part[i] = a.monoid_part[i] + b.monoid_part[i];
  r.unit = a.unit * b.unit;
  const auto& ctx = a.prelog->ring->context();
  r.tail.assign(a.order(), Polynomial(ctx));
  for (std::uint32_t i = 1; i <= a.order(); ++i) {
    Polynomial acc = a.tail[i - 1] + b.tail[i - 1];  // r_i q_0 + r_0 q_i
    for (std::uint32_t j = 1; j < i; ++j)
      acc = acc + a.tail[j - 1] * b.tail[i - j - 1];
    r.tail[i - 1] = acc;
  }
  return r;
}

TruncatedPoly JetMorphismData::substitute_ring(const Polynomial& b) const {
  const auto& sctx = alg->total.ring->context();
  if (sctx->nvars() == 0) {
    Polynomial c = b.is_zero()
                       ? Polynomial(target->context())
                       : Polynomial::constant(target->context(),
                                              b.constant_term());
    return TruncatedPoly::constant(target->context(), order, c);
  }
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < sctx->nvars(); ++v)
    images.insert({sctx->name_of(v), ring_images.at(v)});
  return substitute(b, images);
}

bool JetMorphismData::validate(std::string* witness) const {
  if (!alg) throw DomainError("unbound jet");
  if (ring_images.size() != alg->total.ring->context()->nvars())
    throw DomainError("jet: one image per ring variable required");
  if (log_images.size() != alg->total.monoid.ngens())
    throw DomainError("jet: one image per log generator required");
  for (const auto& img : ring_images)
    if (img.order() != order)
      throw DomainError("jet: ring image order mismatch");
  for (const auto& img : log_images) {
    if (img.order() != order)
      throw DomainError("jet: log image order mismatch");
    if (!img.prelog || !(img.prelog->ring->context() == target->context() ||
                         img.prelog->ring->context()->same_as(*target->context())))
      throw DomainError("jet: log image must live over the target ring");
  }

  for (const auto& g : alg->total.ring->ideal().generators) {
    TruncatedPoly image = substitute_ring(g);
    for (std::uint32_t i = 0; i <= order; ++i)
      if (!target->contains(image.coeff(i))) {
        if (witness) *witness = "ideal generator " + g.to_string();
        return false;
      }
  }
  for (std::size_t k = 0; k < log_images.size(); ++k) {
    TruncatedPoly lhs = substitute_ring(alg->total.alpha[k]);
    TruncatedPoly rhs = log_images[k].alpha_hat();
    for (std::uint32_t i = 0; i <= order; ++i)
      if (!target->contains(lhs.coeff(i) - rhs.coeff(i))) {
        if (witness)
          *witness = "log generator " + alg->total.monoid.generators[k];
        return false;
      }
  }
  return true;
}

HigherLogDerivation jet_to_derivation(const JetMorphismData& jet) {
  HigherLogDerivation d;
  d.alg = jet.alg;
  d.target = jet.target;
  d.order = jet.order;
  d.d_values = jet.ring_images;
  const auto& ctx = jet.target->context();
  for (const auto& img : jet.log_images) {
    std::vector<Polynomial> delta;
    delta.push_back(Polynomial::constant(ctx, 1));  // delta_0 = 1
    for (const auto& r : img.tail) delta.push_back(r);
    d.delta.push_back(std::move(delta));
  }
  return d;
}

TruncatedPoly HigherLogDerivation::apply_D(const Polynomial& b) const {
  const auto& sctx = alg->total.ring->context();
  if (sctx->nvars() == 0) {
    Polynomial c = b.is_zero()
                       ? Polynomial(target->context())
                       : Polynomial::constant(target->context(),
                                              b.constant_term());
    return TruncatedPoly::constant(target->context(), order, c);
  }
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < sctx->nvars(); ++v)
    images.insert({sctx->name_of(v), d_values.at(v)});
  return substitute(b, images);
}

std::vector<Polynomial> HigherLogDerivation::apply_delta(const IntVec& m) const {
  if (m.size() != delta.size())
    throw DomainError("apply_delta: element arity mismatch");
  const auto& ctx = target->context();
  TruncatedPoly acc =
      TruncatedPoly::constant(ctx, order, Polynomial::constant(ctx, 1));
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (m[k] < 0) throw DomainError("apply_delta: negative exponent");
    TruncatedPoly series(ctx, order);
    for (std::uint32_t i = 0; i <= order; ++i) series.coeff(i) = delta[k][i];
    Int mag = m[k];
    if (!mag.fits_uint_p()) throw DomainError("apply_delta: exponent too large");
    acc = acc * series.pow(static_cast<std::uint32_t>(mag.get_ui()));
  }
  std::vector<Polynomial> out;
  for (std::uint32_t i = 0; i <= order; ++i) out.push_back(acc.coeff(i));
  return out;
}

namespace {

Polynomial random_base_element(Rng& rng, const ContextPtr& ctx) {
  Polynomial p = Polynomial::constant(ctx, rng.range(-3, 3));
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v) {
    if (rng.below(2) == 0) continue;
    p = p + Polynomial::variable(ctx, ctx->name_of(v))
                .pow(1 + static_cast<std::uint32_t>(rng.below(2)))
                .scaled(FieldScalar::from_int(ctx->characteristic(),
                                              rng.range(-2, 2)));
  }
  if (ctx->nvars() > 0 && rng.below(2) == 0)
    p = p * Polynomial::variable(ctx, ctx->name_of(0)) +
        Polynomial::constant(ctx, 1);
  return p;
}

IntVec random_monoid_element(Rng& rng, std::size_t n) {
  IntVec v(n, Int(0));
  for (auto& e : v) e = Int(static_cast<long>(rng.below(3)));
  return v;
}

}  // namespace

AxiomReport check_derivation_axioms(const HigherLogDerivation& d,
                                    std::uint64_t seed, int trials) {
  AxiomReport rep;
  Rng rng(seed);
  const auto& bctx = d.alg->total.ring->context();
  const auto& R = *d.target;
  auto zero_mod = [&](const Polynomial& p) { return R.contains(p); };

  // i: D_0 is a ring homomorphism landing in R
  {
    AxiomCheck c{"i (D_0 ring homomorphism)", true, ""};
    for (int t = 0; t < trials && c.pass; ++t) {
      auto f = random_base_element(rng, bctx);
      auto g = random_base_element(rng, bctx);
      Polynomial lhs = d.apply_D(f * g).coeff(0);
      Polynomial rhs = d.apply_D(f).coeff(0) * d.apply_D(g).coeff(0);
      if (!zero_mod(lhs - rhs)) {
        c.pass = false;
        c.witness = "f = " + f.to_string() + ", g = " + g.to_string();
      }
    }
    rep.checks.push_back(c);
  }
  // ii: divided Leibniz identity for every k
  {
    AxiomCheck c{"ii (divided Leibniz)", true, ""};
    for (int t = 0; t < trials && c.pass; ++t) {
      auto f = random_base_element(rng, bctx);
      auto g = random_base_element(rng, bctx);
      TruncatedPoly lhs = d.apply_D(f * g);
      TruncatedPoly rhs = d.apply_D(f) * d.apply_D(g);
      for (std::uint32_t i = 0; i <= d.order; ++i)
        if (!zero_mod(lhs.coeff(i) - rhs.coeff(i))) {
          c.pass = false;
          c.witness = "k = " + std::to_string(i) + ", f = " + f.to_string() +
                      ", g = " + g.to_string();
          break;
        }
    }
    rep.checks.push_back(c);
  }
  // iii: D_k(alpha(m)) = D_0(alpha(m)) delta_k(m)
  {
    AxiomCheck c{"iii (log compatibility)", true, ""};
    for (int t = 0; t < trials && c.pass; ++t) {
      IntVec m = random_monoid_element(rng, d.delta.size());
      Polynomial am = d.alg->total.alpha_of(m);
      TruncatedPoly Dam = d.apply_D(am);
      auto dm = d.apply_delta(m);
      for (std::uint32_t k = 1; k <= d.order; ++k)
        if (!zero_mod(Dam.coeff(k) - Dam.coeff(0) * dm[k])) {
          c.pass = false;
          c.witness = "k = " + std::to_string(k);
          break;
        }
    }
    rep.checks.push_back(c);
  }
  // iv: delta_0 = 1 and the convolution law
  {
    AxiomCheck c{"iv (delta_0 = 1 and convolution)", true, ""};
    for (std::size_t k = 0; k < d.delta.size() && c.pass; ++k)
      if (!zero_mod(d.delta[k][0] -
                    Polynomial::constant(d.target->context(), 1))) {
        c.pass = false;
        c.witness =
            "delta_0(" + d.alg->total.monoid.generators[k] + ") != 1";
      }
    for (int t = 0; t < trials && c.pass; ++t) {
      IntVec m = random_monoid_element(rng, d.delta.size());
      IntVec p = random_monoid_element(rng, d.delta.size());
      IntVec mp(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) mp[i] = m[i] + p[i];
      auto dm = d.apply_delta(m);
      auto dp = d.apply_delta(p);
      auto dmp = d.apply_delta(mp);
      for (std::uint32_t k = 0; k <= d.order; ++k) {
        Polynomial conv(d.target->context());
        for (std::uint32_t i = 0; i <= k; ++i)
          conv = conv + dm[i] * dp[k - i];
        if (!zero_mod(dmp[k] - conv)) {
          c.pass = false;
          c.witness = "k = " + std::to_string(k);
          break;
        }
      }
    }
    rep.checks.push_back(c);
  }
  // v: base elements are killed in positive degree
  {
    AxiomCheck c{"v (base vanishing)", true, ""};
    const auto& actx = d.alg->base.ring->context();
    for (std::uint32_t a = 0; a < actx->nvars() && c.pass; ++a) {
      Polynomial img = d.alg->structure_map.images.at(a);
      TruncatedPoly Dimg = d.apply_D(img);
      for (std::uint32_t k = 1; k <= d.order; ++k)
        if (!zero_mod(Dimg.coeff(k))) {
          c.pass = false;
          c.witness = "base variable " + actx->name_of(a);
          break;
        }
    }
    // constants from the scalar field
    Polynomial five = Polynomial::constant(bctx, 5);
    TruncatedPoly D5 = d.apply_D(five);
    for (std::uint32_t k = 1; k <= d.order && c.pass; ++k)
      if (!zero_mod(D5.coeff(k))) {
        c.pass = false;
        c.witness = "constant";
      }
    rep.checks.push_back(c);
  }
  return rep;
}

Polynomial evaluate_hs_element(const HSPresentation& hs, const Polynomial& e,
                               const JetMorphismData& jet) {
  const auto& tctx = jet.target->context();
  std::map<std::string, TruncatedPoly> images;
  for (std::size_t j = 0; j < hs.ring_generators(); ++j)
    for (std::uint32_t i = 0; i <= hs.order(); ++i) {
      Polynomial value = i <= jet.order ? jet.ring_images.at(j).coeff(i)
                                        : Polynomial(tctx);
      images.insert({hs.d_name(j, i), TruncatedPoly::constant(tctx, 0, value)});
    }
  for (std::size_t k = 0; k < hs.log_generators(); ++k)
    for (std::uint32_t i = 1; i <= hs.order(); ++i) {
      Polynomial value = i <= jet.order && i >= 1
                             ? jet.log_images.at(k).tail.at(i - 1)
                             : Polynomial(tctx);
      images.insert({hs.del_name(k, i), TruncatedPoly::constant(tctx, 0, value)});
    }
  return substitute(e, images).coeff(0);
}

}  // namespace logjet
