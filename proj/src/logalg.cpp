#include "logalg.hpp"

#include <map>

namespace logjet {

RingPtr make_ring(ContextPtr ctx, std::vector<Polynomial> ideal_gens,
                  const GroebnerLimits& limits) {
  return std::make_shared<GroebnerContext>(GroebnerContext::compute(
      IdealPresentation(std::move(ctx), std::move(ideal_gens)), limits));
}

RingPtr make_scalar_ring(std::uint32_t characteristic) {
  return make_ring(make_context({}, OrderKind::grevlex, characteristic), {});
}

PreLogStructure PreLogStructure::trivial(RingPtr ring) {
  PreLogStructure p;
  p.monoid = MonoidPresentation::trivial();
  p.ring = std::move(ring);
  return p;
}

Polynomial PreLogStructure::alpha_of(const IntVec& element) const {
  if (element.size() != monoid.ngens())
    throw DomainError("alpha_of: element arity mismatch");
  Polynomial acc = Polynomial::constant(ring->context(), 1);
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (element[i] < 0)
      throw DomainError("alpha_of: negative exponent needs a localization");
    if (element[i] == 0) continue;
    if (!element[i].fits_uint_p())
      throw DomainError("alpha_of: exponent too large");
    acc = acc * alpha[i].pow(static_cast<std::uint32_t>(element[i].get_ui()));
  }
  return acc;
}

void PreLogStructure::validate() const {
  monoid.validate();
  if (alpha.size() != monoid.ngens())
    throw DomainError("pre-log structure: one alpha image per generator required");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (ring->contains(alpha[i]))
      throw DomainError("alpha image of '" + monoid.generators[i] +
                        "' vanishes modulo the ideal");
  }
  for (const auto& [l, r] : monoid.relations) {
    bool neg = false;
    for (const auto& e : l) neg = neg || e < 0;
    for (const auto& e : r) neg = neg || e < 0;
    if (neg) continue;  // group-side relations are certified in localizations
    if (!ring->contains(alpha_of(l) - alpha_of(r)))
      throw DomainError("alpha does not respect a declared monoid relation");
  }
}

RingMorphism RingMorphism::identity(RingPtr ring) {
  RingMorphism m;
  m.source = ring;
  m.target = std::move(ring);
  const auto& ctx = m.source->context();
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v)
    m.images.push_back(Polynomial::variable(ctx, ctx->name_of(v)));
  return m;
}

Polynomial RingMorphism::apply(const Polynomial& f) const {
  const auto& sctx = source->context();
  const auto& tctx = target->context();
  if (images.size() != sctx->nvars())
    throw DomainError("ring morphism: one image per source variable required");
  if (sctx->nvars() == 0) {
    // constants only
    if (f.is_zero()) return Polynomial::zero(tctx);
    return Polynomial::constant(
        tctx, FieldScalar::from_rat(tctx->characteristic(),
                                    f.constant_term().characteristic() == 0
                                        ? f.constant_term().rat()
                                        : Rat(static_cast<long>(
                                              f.constant_term().residue()))));
  }
  std::map<std::string, TruncatedPoly> imgs;
  for (std::uint32_t v = 0; v < sctx->nvars(); ++v)
    imgs.insert({sctx->name_of(v), TruncatedPoly::constant(tctx, 0, images[v])});
  return substitute(f, imgs).coeff(0);
}

bool RingMorphism::well_defined(std::string* witness) const {
  for (const auto& g : source->ideal().generators) {
    if (!target->contains(apply(g))) {
      if (witness) *witness = g.to_string();
      return false;
    }
  }
  return true;
}

LogAlgebraPresentation LogAlgebraPresentation::over_scalars(
    PreLogStructure total) {
  LogAlgebraPresentation alg;
  alg.base = PreLogStructure::trivial(
      make_scalar_ring(total.ring->context()->characteristic()));
  alg.total = std::move(total);
  alg.structure_map.source = alg.base.ring;
  alg.structure_map.target = alg.total.ring;
  alg.bind();
  return alg;
}

void LogAlgebraPresentation::bind() {
  monoid_map.source = &base.monoid;
  monoid_map.target = &total.monoid;
  if (monoid_map.images.size() != base.monoid.ngens())
    monoid_map.images.assign(base.monoid.ngens(),
                             IntVec(total.monoid.ngens(), Int(0)));
}

bool LogAlgebraPresentation::square_commutes(std::string* witness) const {
  for (std::size_t k = 0; k < base.monoid.ngens(); ++k) {
    IntVec unit(base.monoid.ngens(), Int(0));
    unit[k] = 1;
    Polynomial lhs = structure_map.apply(base.alpha_of(unit));
    Polynomial rhs = total.alpha_of(monoid_map.apply(unit));
    if (!total.ring->contains(lhs - rhs)) {
      if (witness) *witness = base.monoid.generators[k];
      return false;
    }
  }
  return true;
}

AssociatedLog AssociatedLog::build(PreLogStructure pre,
                                   const GroebnerLimits& limits) {
  pre.validate();
  auto loc = std::make_shared<LocalizedContext>(
      LocalizedContext::localize(*pre.ring, pre.alpha, limits));
  return AssociatedLog(std::move(pre), std::move(loc));
}

Polynomial AssociatedLog::realize(const IntVec& m, const Polynomial& unit) const {
  if (m.size() != pre_.monoid.ngens())
    throw DomainError("realize: element arity mismatch");
  Polynomial acc = loc_->lift(unit);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Int mag = abs(m[i]);
    if (!mag.fits_uint_p()) throw DomainError("realize: exponent too large");
    std::uint32_t e = static_cast<std::uint32_t>(mag.get_ui());
    Polynomial factor =
        m[i] > 0 ? loc_->lift(pre_.alpha[i]) : loc_->inverse_var(i);
    acc = acc * factor.pow(e);
  }
  return acc;
}

bool AssociatedLog::elements_equal(const IntVec& m1, const Polynomial& u1,
                                   const IntVec& m2, const Polynomial& u2) const {
  Polynomial d = realize(m1, u1) - realize(m2, u2);
  return loc_->extended().contains(d);
}

LocalizedLogAlgebra localize_log_algebra(const LogAlgebraPresentation& alg,
                                         const std::vector<Polynomial>& s,
                                         const GroebnerLimits& limits) {
  LocalizedLogAlgebra out;
  out.original = alg;
  out.original.bind();
  out.inverted = s;
  out.localization = std::make_shared<LocalizedContext>(
      LocalizedContext::localize(*alg.total.ring, s, limits));
  for (std::size_t k = 0; k < alg.total.monoid.ngens(); ++k) {
    const Polynomial lifted = out.localization->lift(alg.total.alpha[k]);
    out.generator_is_unit.push_back(
        out.localization->extended().is_unit_mod(lifted, limits));
  }
  return out;
}

}  // namespace logjet
