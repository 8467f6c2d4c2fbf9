#include "mult.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace logjet {

RationalPoint RationalPoint::parse(const ContextPtr& ctx,
                                   const std::string& csv) {
  RationalPoint p;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string part = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
      part.erase(part.begin());
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
      part.pop_back();
    if (part.empty()) throw ParseError("empty coordinate", 1, static_cast<int>(pos + 1));
    Rat q(part);
    q.canonicalize();
    p.coords.push_back(FieldScalar::from_rat(ctx->characteristic(), q));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (p.coords.size() != ctx->nvars())
    throw DomainError("point arity " + std::to_string(p.coords.size()) +
                      " does not match " + std::to_string(ctx->nvars()) +
                      " variables");
  return p;
}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].to_string();
  }
  return s + ")";
}

void DivisorRep::validate() const {
  if (ambient->contains(local_equation))
    throw DomainError(
        "local equation vanishes identically on the ambient; multiplicity is "
        "infinite");
}

namespace {

void check_point_arity(const DivisorRep& d, const RationalPoint& p) {
  if (p.coords.size() != d.ambient->context()->nvars())
    throw DomainError("point arity does not match the ambient ring");
}

// supported shapes: free ring (0 ideal generators) or hypersurface (1)
const Polynomial* ambient_hypersurface(const DivisorRep& d) {
  const auto& gens = d.ambient->ideal().generators;
  if (gens.empty()) return nullptr;
  if (gens.size() == 1) return &gens[0];
  throw UnsupportedError(
      "ambient with more than one defining equation is not supported");
}

void check_nonsingular(const DivisorRep& d, const RationalPoint& p) {
  const Polynomial* g = ambient_hypersurface(d);
  if (!g) return;  // affine space: every rational point is nonsingular
  if (!g->evaluate(p.coords).is_zero())
    throw DomainError("point does not lie on the ambient hypersurface");
  const auto& ctx = d.ambient->context();
  bool jac = false;
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v)
    if (!g->derivative(v).evaluate(p.coords).is_zero()) jac = true;
  if (!jac)
    throw UnsupportedError(
        "singular point of the ambient: the jet criterion does not apply");
}

}  // namespace

std::optional<std::uint32_t> taylor_multiplicity(const DivisorRep& d,
                                                 const RationalPoint& p) {
  check_point_arity(d, p);
  if (ambient_hypersurface(d) != nullptr)
    throw UnsupportedError(
        "taylor multiplicity needs the free ambient (shift of coordinates)");
  if (d.local_equation.is_zero()) return std::nullopt;

  // shift: evaluate s(x + p) and take the least total degree
  const auto& ctx = d.local_equation.context();
  std::map<std::string, TruncatedPoly> images;
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v) {
    Polynomial shifted = Polynomial::variable(ctx, ctx->name_of(v)) +
                         Polynomial::constant(ctx, p.coords[v]);
    images.insert({ctx->name_of(v), TruncatedPoly::constant(ctx, 0, shifted)});
  }
  Polynomial s = ctx->nvars() == 0 ? d.local_equation
                                   : substitute(d.local_equation, images).coeff(0);
  std::uint64_t min_deg = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [m, c] : s.terms())
    min_deg = std::min(min_deg, m.degree());
  return static_cast<std::uint32_t>(min_deg);
}

bool jet_vanishing_test(const DivisorRep& d, const RationalPoint& p,
                        std::uint32_t n, JetWitness* witness) {
  check_point_arity(d, p);
  check_nonsingular(d, p);
  const Polynomial* g = ambient_hypersurface(d);
  const auto& ctx = d.ambient->context();

  // jet coefficient ring: one variable per (ambient variable, order)
  std::vector<std::string> cnames;
  for (std::uint32_t v = 0; v < ctx->nvars(); ++v)
    for (std::uint32_t i = 1; i <= n; ++i)
      cnames.push_back(fresh_name(cnames, "c" + std::to_string(i) + "_" +
                                              ctx->name_of(v)));
  auto cctx = make_context(cnames, OrderKind::grevlex, ctx->characteristic());

  std::map<std::string, TruncatedPoly> images;
  {
    std::size_t pos = 0;
    for (std::uint32_t v = 0; v < ctx->nvars(); ++v) {
      TruncatedPoly jet(cctx, n);
      jet.coeff(0) = Polynomial::constant(cctx, p.coords[v]);
      for (std::uint32_t i = 1; i <= n; ++i)
        jet.coeff(i) = Polynomial::variable(cctx, cnames[pos++]);
      images.insert({ctx->name_of(v), jet});
    }
  }
  TruncatedPoly s_image =
      ctx->nvars() == 0
          ? TruncatedPoly::constant(cctx, n,
                                    Polynomial::constant(
                                        cctx, d.local_equation.constant_term()))
          : substitute(d.local_equation, images);

  if (!g) {
    for (std::uint32_t i = 0; i <= n; ++i)
      if (!s_image.coeff(i).is_zero()) {
        if (witness) {
          witness->order = i;
          witness->coefficient = s_image.coeff(i);
        }
        return false;
      }
    return true;
  }

  // hypersurface: compare modulo the arc constraints of the ambient
  TruncatedPoly g_image = substitute(*g, images);
  std::vector<Polynomial> constraints;
  for (std::uint32_t i = 1; i <= n; ++i)
    if (!g_image.coeff(i).is_zero()) constraints.push_back(g_image.coeff(i));
  auto arc_ideal =
      GroebnerContext::compute(IdealPresentation(cctx, constraints));
  for (std::uint32_t i = 0; i <= n; ++i) {
    Polynomial nf = arc_ideal.normal_form(s_image.coeff(i));
    if (!nf.is_zero()) {
      if (witness) {
        witness->order = i;
        witness->coefficient = nf;
      }
      return false;
    }
  }
  return true;
}

std::string MultiplicityResult::to_string() const {
  if (capped) return "mult >= " + std::to_string(value);
  return "mult = " + std::to_string(value);
}

MultiplicityResult multiplicity_via_jets(const DivisorRep& d,
                                         const RationalPoint& p,
                                         std::uint32_t cap) {
  MultiplicityResult r;
  for (std::uint32_t n = 0; n < cap; ++n) {
    JetWitness w;
    if (!jet_vanishing_test(d, p, n, &w)) {
      r.capped = false;
      r.value = n;
      r.witness = w;
      return r;
    }
  }
  r.capped = true;
  r.value = cap;
  return r;
}

}  // namespace logjet
