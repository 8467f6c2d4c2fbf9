#include "hasse.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace logjet {

namespace {

// rename by variable name into a context that contains all used names
Polynomial transport(const Polynomial& f, const ContextPtr& target) {
  const auto& src = *f.context();
  std::vector<std::uint32_t> var_map(src.nvars(), 0);
  for (std::uint32_t v = 0; v < src.nvars(); ++v) {
    auto idx = target->index_of(src.name_of(v));
    var_map[v] = idx ? *idx : std::numeric_limits<std::uint32_t>::max();
  }
  // unmapped variables are only legal if unused
  return f.rename(target, var_map);
}

}  // namespace

std::size_t HSPresentation::ring_generators() const {
  return alg_.total.ring->context()->nvars();
}

std::size_t HSPresentation::log_generators() const {
  return alg_.total.monoid.ngens();
}

const std::string& HSPresentation::d_name(std::size_t var,
                                          std::uint32_t i) const {
  if (i == 0) return alg_.total.ring->context()->name_of(
      static_cast<std::uint32_t>(var));
  return d_names_.at(var).at(i - 1);
}

const std::string& HSPresentation::del_name(std::size_t gen,
                                            std::uint32_t i) const {
  if (i == 0) throw DomainError("del_0 is the constant 1, not a symbol");
  return del_names_.at(gen).at(i - 1);
}

Polynomial HSPresentation::d_symbol(std::size_t var, std::uint32_t i) const {
  return Polynomial::variable(hs_ctx_, d_name(var, i));
}

Polynomial HSPresentation::del_symbol(std::size_t gen, std::uint32_t i) const {
  if (i == 0) return Polynomial::constant(hs_ctx_, 1);
  return Polynomial::variable(hs_ctx_, del_name(gen, i));
}

std::uint64_t HSPresentation::weight_of(const Monomial& m) const {
  std::uint64_t w = 0;
  for (const auto& [v, e] : m.exps()) w += static_cast<std::uint64_t>(weight_[v]) * e;
  return w;
}

bool HSPresentation::is_homogeneous(const Polynomial& p,
                                    std::uint64_t* weight) const {
  if (p.is_zero()) return true;
  std::uint64_t w = weight_of(p.terms().front().first);
  for (const auto& [m, c] : p.terms())
    if (weight_of(m) != w) return false;
  if (weight) *weight = w;
  return true;
}

bool HSPresentation::ideal_is_homogeneous() const {
  for (const auto& g : ring_->basis())
    if (!is_homogeneous(g)) return false;
  return true;
}

TruncatedPoly HSPresentation::prolong_series(const Polynomial& f_total) const {
  const auto& tctx = alg_.total.ring->context();
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < tctx->nvars(); ++v) {
    TruncatedPoly jet(hs_ctx_, order_);
    for (std::uint32_t i = 0; i <= order_; ++i) jet.coeff(i) = d_symbol(v, i);
    images.insert({tctx->name_of(v), jet});
  }
  if (tctx->nvars() == 0)
    return TruncatedPoly::constant(hs_ctx_, order_, transport(f_total, hs_ctx_));
  return substitute(f_total, images);
}

Polynomial HSPresentation::prolong(const Polynomial& f_total,
                                   std::uint32_t i) const {
  if (i > order_)
    throw DomainError("prolongation order " + std::to_string(i) +
                      " exceeds presentation order " + std::to_string(order_));
  return prolong_series(f_total).coeff(i);
}

Polynomial HSPresentation::partial_of_element(const IntVec& w,
                                              std::uint32_t i) const {
  if (w.size() != log_generators())
    throw DomainError("partial_of_element: arity mismatch");
  TruncatedPoly acc =
      TruncatedPoly::constant(hs_ctx_, order_, Polynomial::constant(hs_ctx_, 1));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    if (w[k] < 0)
      throw UnsupportedError("negative monoid exponent in partial expansion");
    TruncatedPoly series(hs_ctx_, order_);
    series.coeff(0) = Polynomial::constant(hs_ctx_, 1);
    for (std::uint32_t j = 1; j <= order_; ++j) series.coeff(j) = del_symbol(k, j);
    Int mag = w[k];
    if (!mag.fits_uint_p())
      throw DomainError("partial_of_element: exponent too large");
    acc = acc * series.pow(static_cast<std::uint32_t>(mag.get_ui()));
  }
  return acc.coeff(i);
}

const Polynomial& HSPresentation::log_partial(std::size_t gen,
                                              std::uint32_t i) const {
  if (!loc_) throw DomainError("no localized embedding present");
  if (i == 0 || i > order_) throw DomainError("log_partial order out of range");
  return del_realized_.at(gen).at(i - 1);
}

Polynomial HSPresentation::to_localized(const Polynomial& e) const {
  if (!loc_) throw DomainError("no localized embedding present");
  const auto& ectx = loc_->extended().context();
  if (hs_ctx_->nvars() == 0) return transport(e, ectx);
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < hs_ctx_->nvars(); ++v) {
    const std::string& name = hs_ctx_->name_of(v);
    if (ectx->index_of(name))
      images.insert({name, TruncatedPoly::constant(
                               ectx, 0, Polynomial::variable(ectx, name))});
  }
  for (std::size_t k = 0; k < log_generators(); ++k)
    for (std::uint32_t i = 1; i <= order_; ++i)
      images.insert_or_assign(
          del_names_[k][i - 1],
          TruncatedPoly::constant(ectx, 0, del_realized_[k][i - 1]));
  return substitute(e, images).coeff(0);
}

HSPresentation HSPresentation::build(LogAlgebraPresentation alg,
                                     std::uint32_t n, BuildOptions opts) {
  if (n > opts.order_cap)
    throw UnsupportedError(
        "requested order " + std::to_string(n) + " exceeds the cap " +
        std::to_string(opts.order_cap) +
        " (raise the cap explicitly to proceed)");
  alg.bind();
  alg.total.validate();
  alg.base.validate();

  HSPresentation hs;
  hs.alg_ = alg;
  hs.order_ = n;
  hs.embedded_ = opts.embedded;

  const auto& tctx = alg.total.ring->context();
  const std::uint32_t chr = tctx->characteristic();
  const std::size_t nvars = tctx->nvars();
  const std::size_t ngens = alg.total.monoid.ngens();

  // symbol layout: x_1..x_s, then d_i x_j grouped by generator, then
  // del_i m_k grouped by generator
  std::vector<std::string> names = tctx->vars();
  hs.d_names_.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::uint32_t i = 1; i <= n; ++i) {
      std::string want = "d" + std::to_string(i) + "_" + tctx->name_of(
                             static_cast<std::uint32_t>(j));
      std::string nm = fresh_name(names, want);
      names.push_back(nm);
      hs.d_names_[j].push_back(nm);
    }
  hs.del_names_.resize(ngens);
  for (std::size_t k = 0; k < ngens; ++k)
    for (std::uint32_t i = 1; i <= n; ++i) {
      std::string want =
          "del" + std::to_string(i) + "_" + alg.total.monoid.generators[k];
      std::string nm = fresh_name(names, want);
      names.push_back(nm);
      hs.del_names_[k].push_back(nm);
    }
  hs.hs_ctx_ = make_context(names, tctx->order(), chr);
  hs.weight_.assign(names.size(), 0);
  {
    std::size_t pos = nvars;
    for (std::size_t j = 0; j < nvars; ++j)
      for (std::uint32_t i = 1; i <= n; ++i) hs.weight_[pos++] = i;
    for (std::size_t k = 0; k < ngens; ++k)
      for (std::uint32_t i = 1; i <= n; ++i) hs.weight_[pos++] = i;
  }

  // d-side generators: the ideal, its prolongations, and the prolongations
  // of the images of the base-ring variables
  std::vector<Polynomial> dgens;
  for (const auto& g : alg.total.ring->ideal().generators) {
    TruncatedPoly series = hs.prolong_series(g);
    for (std::uint32_t i = 0; i <= n; ++i) {
      Polynomial c = series.coeff(i);
      if (!c.is_zero()) dgens.push_back(c);
    }
  }
  for (std::uint32_t a = 0; a < alg.base.ring->context()->nvars(); ++a) {
    const Polynomial& img = alg.structure_map.images.at(a);
    TruncatedPoly series = hs.prolong_series(img);
    for (std::uint32_t i = 1; i <= n; ++i) {
      Polynomial c = series.coeff(i);
      if (!c.is_zero()) dgens.push_back(c);
    }
  }

  // del-side generators
  std::vector<Polynomial> del_gens;
  // alpha relations (6): d_i alpha_k - alpha_k del_i m_k
  std::vector<TruncatedPoly> alpha_series;
  for (std::size_t k = 0; k < ngens; ++k)
    alpha_series.push_back(hs.prolong_series(alg.total.alpha[k]));
  for (std::size_t k = 0; k < ngens; ++k) {
    Polynomial alpha0 = alpha_series[k].coeff(0);
    for (std::uint32_t i = 1; i <= n; ++i)
      del_gens.push_back(alpha_series[k].coeff(i) -
                         alpha0 * hs.del_symbol(k, i));
  }
  // declared monoid relations (5), expanded by the divided convolution law
  for (const auto& [l, r] : alg.total.monoid.relations) {
    for (std::uint32_t i = 1; i <= n; ++i)
      del_gens.push_back(hs.partial_of_element(l, i) -
                         hs.partial_of_element(r, i));
  }
  // base monoid images (2): del_i of the flat image of a base generator
  for (std::size_t a = 0; a < alg.base.monoid.ngens(); ++a) {
    IntVec unit(alg.base.monoid.ngens(), Int(0));
    unit[a] = 1;
    IntVec img = alg.monoid_map.apply(unit);
    for (std::uint32_t i = 1; i <= n; ++i) {
      Polynomial c = hs.partial_of_element(img, i);
      if (!c.is_zero()) del_gens.push_back(c);
    }
  }

  // d-only ring and its localization at the alpha images
  {
    std::vector<std::string> dvars(names.begin(),
                                   names.begin() + static_cast<std::ptrdiff_t>(
                                                       nvars + nvars * n));
    hs.d_ctx_ = make_context(dvars, tctx->order(), chr);
    std::vector<Polynomial> dg;
    for (const auto& g : dgens) dg.push_back(transport(g, hs.d_ctx_));
    hs.d_ring_ = make_ring(hs.d_ctx_, dg, opts.limits);
    std::vector<Polynomial> s;
    for (std::size_t k = 0; k < ngens; ++k)
      s.push_back(transport(alpha_series[k].coeff(0), hs.d_ctx_));
    hs.loc_ = std::make_shared<LocalizedContext>(
        LocalizedContext::localize(*hs.d_ring_, s, opts.limits));
    const auto& ectx = hs.loc_->extended().context();
    hs.del_realized_.resize(ngens);
    for (std::size_t k = 0; k < ngens; ++k)
      for (std::uint32_t i = 1; i <= n; ++i)
        hs.del_realized_[k].push_back(hs.loc_->inverse_var(k) *
                                      transport(alpha_series[k].coeff(i), ectx));
  }

  std::vector<Polynomial> ideal_gens;
  if (!opts.embedded || ngens == 0) {
    ideal_gens = dgens;
    ideal_gens.insert(ideal_gens.end(), del_gens.begin(), del_gens.end());
  } else {
    // kernel of x,dx,del -> localized d-ring: adjoin the inverses, impose
    // del_i m_k = u_k d_i alpha_k, eliminate the inverses
    std::vector<std::string> big_names = names;
    std::vector<std::string> u_names;
    for (std::size_t k = 0; k < ngens; ++k) {
      std::string nm = fresh_name(big_names, hs.loc_->inverse_name(k));
      u_names.push_back(nm);
      big_names.push_back(nm);
    }
    auto big_ctx = make_context(big_names, tctx->order(), chr);
    std::vector<Polynomial> big_gens;
    for (const auto& g : hs.loc_->extended().ideal().generators)
      big_gens.push_back(transport(g, big_ctx));
    for (const auto& g : del_gens) big_gens.push_back(transport(g, big_ctx));
    for (std::size_t k = 0; k < ngens; ++k)
      for (std::uint32_t i = 1; i <= n; ++i)
        big_gens.push_back(
            Polynomial::variable(big_ctx, hs.del_names_[k][i - 1]) -
            transport(hs.del_realized_[k][i - 1], big_ctx));
    ideal_gens =
        eliminate_variables(big_ctx, big_gens, u_names, hs.hs_ctx_, opts.limits);
  }

  hs.ring_ = make_ring(hs.hs_ctx_, ideal_gens, opts.limits);
  return hs;
}

Polynomial HSPresentation::apply_d(const Polynomial& e,
                                   const HSPresentation& next) const {
  if (next.order_ != order_ + 1)
    throw DomainError("apply_d: target presentation must have order n+1");
  if (!(e.context() == hs_ctx_ || e.context()->same_as(*hs_ctx_)))
    throw DomainError("apply_d: element not in this presentation's ring");
  const auto& nctx = next.hs_ctx_;

  // image of d applied to each symbol, in the order-(n+1) context
  std::vector<Polynomial> dsym(hs_ctx_->nvars(), Polynomial(nctx));
  const std::size_t nvars = ring_generators();
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::uint32_t i = 0; i <= order_; ++i) {
      auto idx = hs_ctx_->index_of(d_name(j, i));
      dsym[*idx] = next.d_symbol(j, i + 1)
                       .scaled(FieldScalar::from_int(nctx->characteristic(),
                                                     i + 1));
    }
  for (std::size_t k = 0; k < log_generators(); ++k)
    for (std::uint32_t i = 1; i <= order_; ++i) {
      auto idx = hs_ctx_->index_of(del_name(k, i));
      dsym[*idx] =
          next.del_symbol(k, i + 1)
              .scaled(FieldScalar::from_int(nctx->characteristic(), i + 1)) -
          next.del_symbol(k, 1) * next.del_symbol(k, i);
    }

  // Leibniz expansion term by term
  Polynomial out(nctx);
  for (const auto& [mono, coeff] : e.terms()) {
    for (const auto& [v, exp] : mono.exps()) {
      // c * e_v * s_v^{e_v - 1} * d(s_v) * rest
      std::vector<std::pair<std::uint32_t, std::uint32_t>> rest;
      for (const auto& [w, ew] : mono.exps()) {
        std::uint32_t e2 = (w == v) ? ew - 1 : ew;
        if (e2 > 0) {
          auto idx = nctx->index_of(hs_ctx_->name_of(w));
          rest.push_back({*idx, e2});
        }
      }
      FieldScalar c =
          FieldScalar::from_rat(nctx->characteristic(),
                                coeff.characteristic() == 0
                                    ? coeff.rat()
                                    : Rat(static_cast<long>(coeff.residue()))) *
          FieldScalar::from_int(nctx->characteristic(), exp);
      if (c.is_zero()) continue;
      Polynomial term =
          dsym[v].times_term(Monomial(std::move(rest)), c);
      out = out + term;
    }
  }
  return out;
}

OmegaPresentation HSPresentation::omega() const {
  if (order_ != 1)
    throw DomainError("omega presentation requires an order-1 presentation");
  OmegaPresentation om;
  om.coefficient_ring = alg_.total.ring;
  const auto& bctx = om.coefficient_ring->context();

  std::vector<std::uint32_t> sym_vars;  // hs_ctx indices of weight-1 symbols
  for (std::uint32_t v = 0; v < hs_ctx_->nvars(); ++v)
    if (weight_[v] == 1) {
      sym_vars.push_back(v);
      om.generators.push_back(hs_ctx_->name_of(v));
    }

  // weight-0 variable map hs_ctx -> base ctx
  std::vector<std::uint32_t> down(hs_ctx_->nvars(),
                                  std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t v = 0; v < hs_ctx_->nvars(); ++v)
    if (weight_[v] == 0) down[v] = *bctx->index_of(hs_ctx_->name_of(v));

  for (const auto& g : ring_->basis()) {
    std::uint64_t w = 0;
    if (!is_homogeneous(g, &w) || w != 1) continue;
    std::vector<Polynomial> row(sym_vars.size(), Polynomial(bctx));
    for (const auto& [mono, coeff] : g.terms()) {
      // exactly one weight-1 symbol with exponent 1 per term
      std::uint32_t sym = 0;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> rest;
      for (const auto& [v, e] : mono.exps()) {
        if (weight_[v] == 1) {
          sym = v;
        } else {
          rest.push_back({down[v], e});
        }
      }
      std::size_t col = std::distance(
          sym_vars.begin(), std::find(sym_vars.begin(), sym_vars.end(), sym));
      row[col] = row[col] + Polynomial::from_terms(
                                bctx, {{Monomial(std::move(rest)), coeff}});
    }
    for (auto& entry : row) entry = om.coefficient_ring->normal_form(entry);
    om.relations.push_back(std::move(row));
  }
  return om;
}

std::size_t OmegaPresentation::rank() const {
  // fraction-free elimination over the coefficient ring, zero tests by
  // normal form (the ring is assumed integral for this computation)
  auto rows = relations;
  std::size_t r = 0;
  for (std::size_t col = 0; col < generators.size() && r < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!coefficient_ring->normal_form(rows[i][col]).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      if (coefficient_ring->normal_form(rows[i][col]).is_zero()) continue;
      for (std::size_t c = 0; c < generators.size(); ++c) {
        if (c == col) continue;
        rows[i][c] = coefficient_ring->normal_form(
            rows[r][col] * rows[i][c] - rows[i][col] * rows[r][c]);
      }
      rows[i][col] = Polynomial(coefficient_ring->context());
    }
    ++r;
  }
  return generators.size() - r;
}

std::string OmegaPresentation::to_string() const {
  std::string s = "omega generators:";
  for (const auto& g : generators) s += " " + g;
  s += "\n";
  for (const auto& row : relations) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_zero()) continue;
      if (!line.empty()) line += " + ";
      line += "(" + row[c].to_string() + ")*" + generators[c];
    }
    if (!line.empty()) s += "omega relation: " + line + " = 0\n";
  }
  s += "omega rank: " + std::to_string(rank()) + "\n";
  return s;
}

std::string HSPresentation::print() const {
  std::string s;
  s += "hs order " + std::to_string(order_) + "\n";
  s += "mode " + std::string(embedded_ ? "embedded" : "strict") + "\n";
  const auto& tctx = alg_.total.ring->context();
  s += "ring";
  for (const auto& v : tctx->vars()) s += " " + v;
  s += "\n";
  s += "char " + std::to_string(tctx->characteristic()) + "\n";
  s += "symbols";
  for (std::uint32_t v = static_cast<std::uint32_t>(tctx->nvars());
       v < hs_ctx_->nvars(); ++v)
    s += " " + hs_ctx_->name_of(v);
  s += "\n";
  for (const auto& g : ring_->basis()) s += "basis " + g.to_string() + "\n";
  return s;
}

bool check_d_well_defined(const HSPresentation& at, const HSPresentation& next,
                          std::string* witness) {
  for (const auto& g : at.ring()->basis()) {
    Polynomial dg = at.apply_d(g, next);
    if (!next.ring()->contains(dg)) {
      if (witness) *witness = g.to_string();
      return false;
    }
  }
  return true;
}

GenerationStepReport check_generation_step(const LogAlgebraPresentation& alg, std::uint32_t n,
                            HSPresentation::BuildOptions opts) {
  GenerationStepReport rep;
  auto at = HSPresentation::build(alg, n, opts);
  auto next = HSPresentation::build(alg, n + 1, opts);
  const std::uint32_t chr =
      alg.total.ring->context()->characteristic();
  rep.char_regime = chr != 0 && (n + 1) % chr == 0;

  auto nf = [&](const Polynomial& p) { return next.ring()->normal_form(p); };
  FieldScalar np1 = FieldScalar::from_int(chr, n + 1);

  // witnesses: the ring generators, their pairwise products, and the ideal
  // generators; then each log generator
  std::vector<Polynomial> ring_elems;
  const auto& tctx = alg.total.ring->context();
  for (std::uint32_t v = 0; v < tctx->nvars(); ++v)
    ring_elems.push_back(Polynomial::variable(tctx, tctx->name_of(v)));
  for (std::uint32_t v = 0; v < tctx->nvars(); ++v)
    for (std::uint32_t w = v; w < tctx->nvars(); ++w)
      ring_elems.push_back(Polynomial::variable(tctx, tctx->name_of(v)) *
                           Polynomial::variable(tctx, tctx->name_of(w)));
  for (const auto& g : alg.total.ring->ideal().generators)
    ring_elems.push_back(g);

  for (const auto& b : ring_elems) {
    Polynomial lhs = next.prolong(b, n + 1).scaled(np1);
    Polynomial rhs = at.apply_d(at.prolong(b, n), next);
    if (!nf(lhs - rhs).is_zero()) {
      rep.holds = false;
      rep.detail = "(n+1) d_{n+1} b != d(d_n b) for b = " + b.to_string();
      return rep;
    }
  }
  for (std::size_t k = 0; k < alg.total.monoid.ngens(); ++k) {
    IntVec unit(alg.total.monoid.ngens(), Int(0));
    unit[k] = 1;
    Polynomial lhs = next.partial_of_element(unit, n + 1).scaled(np1);
    Polynomial rhs = at.apply_d(at.del_symbol(k, n), next) +
                     next.del_symbol(k, 1) * next.del_symbol(k, n);
    if (!nf(lhs - rhs).is_zero()) {
      rep.holds = false;
      rep.detail = "partial identity fails for log generator " +
                   alg.total.monoid.generators[k];
      return rep;
    }
  }
  if (rep.char_regime) {
    // the identities hold but both sides are forced to zero: the
    // generation step degenerates, matching the positive-characteristic
    // counterexample
    bool all_zero = true;
    for (std::uint32_t v = 0; v < tctx->nvars(); ++v) {
      Polynomial b = Polynomial::variable(tctx, tctx->name_of(v));
      if (!nf(at.apply_d(at.prolong(b, n), next)).is_zero()) all_zero = false;
    }
    rep.detail = all_zero ? "characteristic divides n+1: d(d_n b) = 0, "
                            "generation degenerates"
                          : "characteristic divides n+1";
  }
  return rep;
}

ExactSequenceReport check_second_exact_sequence(
    const LogAlgebraPresentation& b_alg, const std::vector<Polynomial>& kernel,
    std::uint32_t n, HSPresentation::BuildOptions opts) {
  ExactSequenceReport rep;
  if (opts.embedded)
    throw UnsupportedError(
        "the second exact sequence applies to strict quotients; use the "
        "strict mode");
  auto hs_b = HSPresentation::build(b_alg, n, opts);

  // quotient algebra: same symbols, ideal enlarged by the kernel, same
  // (pushforward) log data
  LogAlgebraPresentation c_alg = b_alg;
  c_alg.bind();
  auto cgens = b_alg.total.ring->ideal().generators;
  for (const auto& g : kernel) cgens.push_back(g);
  c_alg.total.ring = make_ring(b_alg.total.ring->context(), cgens, opts.limits);
  c_alg.structure_map.target = c_alg.total.ring;
  auto hs_c = HSPresentation::build(c_alg, n, opts);

  // ideal(HS_C) should equal ideal(HS_B) + <d_i kernel>
  auto gens = hs_b.ring()->ideal().generators;
  for (const auto& g : kernel) {
    TruncatedPoly series = hs_b.prolong_series(g);
    for (std::uint32_t i = 0; i <= n; ++i)
      if (!series.coeff(i).is_zero()) gens.push_back(series.coeff(i));
  }
  auto sum = GroebnerContext::compute(
      IdealPresentation(hs_b.symbol_context(), gens), opts.limits);
  bool ok = ideal_equal(*hs_c.ring(), sum);
  rep.exact = ok;
  rep.detail = ok ? "quotient ideal matches base ideal plus prolonged kernel"
                  : "ideal mismatch";
  return rep;
}

ExactSequenceReport check_first_exact_sequence(
    const LogAlgebraPresentation& c_over_a, const RingMorphism& b_to_c,
    std::uint32_t n, HSPresentation::BuildOptions opts) {
  ExactSequenceReport rep;
  auto hs_ca = HSPresentation::build(c_over_a, n, opts);

  // C over B: same total data, base replaced by B
  LogAlgebraPresentation c_over_b = c_over_a;
  c_over_b.bind();
  c_over_b.base = PreLogStructure::trivial(b_to_c.source);
  c_over_b.structure_map = b_to_c;
  c_over_b.bind();
  auto hs_cb = HSPresentation::build(c_over_b, n, opts);

  // ideal(HS_{C/B}) = ideal(HS_{C/A}) + <d_i of the images of B's variables>
  auto gens = hs_ca.ring()->ideal().generators;
  for (const auto& img : b_to_c.images) {
    TruncatedPoly series = hs_ca.prolong_series(img);
    for (std::uint32_t i = 1; i <= n; ++i)
      if (!series.coeff(i).is_zero()) gens.push_back(series.coeff(i));
  }
  auto sum = GroebnerContext::compute(
      IdealPresentation(hs_ca.symbol_context(), gens), opts.limits);
  bool ok = ideal_equal(*hs_cb.ring(), sum);
  rep.exact = ok;
  rep.detail = ok ? "relative ideal matches absolute ideal plus prolonged "
                    "base images"
                  : "ideal mismatch";
  return rep;
}

}  // namespace logjet
