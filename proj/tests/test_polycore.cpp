#include "doctest.h"
#include "poly.hpp"
#include "util.hpp"

#include <map>

using namespace logjet;

namespace {

ContextPtr qring(std::vector<std::string> vars,
                 OrderKind ord = OrderKind::grevlex) {
  return make_context(std::move(vars), ord, 0);
}

Polynomial P(const ContextPtr& ctx, const std::string& s) {
  return parse_polynomial(ctx, s);
}

Polynomial random_poly(Rng& rng, const ContextPtr& ctx, int max_deg,
                       int max_terms) {
  std::vector<Polynomial::Term> terms;
  int nterms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exps;
    int budget = static_cast<int>(rng.below(max_deg + 1));
    for (std::uint32_t v = 0; v < ctx->nvars() && budget > 0; ++v) {
      int e = static_cast<int>(rng.below(budget + 1));
      if (e > 0) exps.push_back({v, static_cast<std::uint32_t>(e)});
      budget -= e;
    }
    long c = rng.range(-9, 9);
    if (c == 0) c = 1;
    terms.push_back({Monomial(std::move(exps)),
                     FieldScalar::from_int(ctx->characteristic(), c)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("basic arithmetic and cancellation") {
  auto ctx = qring({"x", "y"});
  CHECK(P(ctx, "(x^2 - y^3) + y^3") == P(ctx, "x^2"));
  auto ctx1 = qring({"z"});
  CHECK(P(ctx1, "(z-1)*(z+1)") == P(ctx1, "z^2 - 1"));
  auto gf2 = make_context({"x"}, OrderKind::grevlex, 2);
  CHECK(P(gf2, "(x+1)^2") == P(gf2, "x^2+1"));
}

TEST_CASE("context mismatch rejected") {
  auto a = qring({"x"});
  auto b = qring({"y"});
  CHECK_THROWS_AS(P(a, "x") + P(b, "y"), DomainError);
}

TEST_CASE("printing is canonical and parse round-trips") {
  auto ctx = qring({"x", "y"});
  auto f = P(ctx, "y^3 - x^2 + 1/2*x*y - 3");
  std::string s = f.to_string();
  CHECK(P(ctx, s) == f);
  CHECK(P(ctx, s).to_string() == s);
  CHECK(P(ctx, "0").to_string() == "0");
  // descending grevlex order: y^3 first (degree 3), then x^2 vs x*y
  CHECK(s == "y^3 - x^2 + 1/2*x*y - 3");
}

TEST_CASE("lex vs grevlex ordering") {
  auto lex = make_context({"x", "y"}, OrderKind::lex, 0);
  CHECK(P(lex, "x + y^3").leading_monomial() == Monomial::var(0));
  auto grev = qring({"x", "y"});
  CHECK(P(grev, "x + y^3").leading_monomial() == Monomial::var(1, 3));
}

TEST_CASE("ring axioms on random triples") {
  auto ctx = qring({"x", "y", "z"});
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng, ctx, 6, 4);
    auto b = random_poly(rng, ctx, 6, 4);
    auto c = random_poly(rng, ctx, 6, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("formal derivative") {
  auto ctx = qring({"z"});
  auto f = P(ctx, "z^5*(z+1)^11");
  auto expected = P(ctx, "z^4*(z+1)^10*(16*z+5)");
  CHECK(f.derivative("z") == expected);

  auto ctx2 = qring({"x", "y"});
  CHECK(P(ctx2, "y^3").derivative("x").is_zero());

  auto gf2 = make_context({"x"}, OrderKind::grevlex, 2);
  CHECK(P(gf2, "x^2").derivative("x").is_zero());

  CHECK_THROWS_AS(P(ctx, "z").derivative("w"), DomainError);
}

TEST_CASE("Leibniz rule on random products") {
  auto ctx = qring({"x", "y"});
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(rng, ctx, 5, 4);
    auto g = random_poly(rng, ctx, 5, 4);
    CHECK((f * g).derivative("x") ==
          f.derivative("x") * g + f * g.derivative("x"));
  }
}

TEST_CASE("truncated arithmetic") {
  auto ctx = qring({"x"});
  auto one = Polynomial::constant(ctx, 1);

  TruncatedPoly a(ctx, 1), b(ctx, 1);
  a.coeff(0) = one;
  a.coeff(1) = one;  // 1 + t
  b.coeff(0) = one;
  b.coeff(1) = -one;  // 1 - t
  auto prod = a * b;
  CHECK(prod.coeff(0) == one);
  CHECK(prod.coeff(1).is_zero());

  TruncatedPoly c(ctx, 2), d(ctx, 2);
  c.coeff(0) = one;
  c.coeff(1) = one;
  c.coeff(2) = one;  // 1 + t + t^2
  d.coeff(0) = one;
  d.coeff(1) = one;  // 1 + t
  auto e = c * d;
  CHECK(e.coeff(0) == one);
  CHECK(e.coeff(1) == P(ctx, "2"));
  CHECK(e.coeff(2) == P(ctx, "2"));

  auto z = TruncatedPoly(ctx, 2);
  CHECK((c * z).is_zero());

  TruncatedPoly wrong(ctx, 3);
  CHECK_THROWS_AS(c * wrong, DomainError);
}

TEST_CASE("truncation coherence") {
  auto ctx = qring({"x", "y"});
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    TruncatedPoly a(ctx, 3), b(ctx, 3);
    for (std::uint32_t k = 0; k <= 3; ++k) {
      a.coeff(k) = random_poly(rng, ctx, 2, 2);
      b.coeff(k) = random_poly(rng, ctx, 2, 2);
    }
    CHECK((a * b).truncated(2) == a.truncated(2) * b.truncated(2));
  }
}

TEST_CASE("substitution examples") {
  auto src = qring({"x", "y"});
  auto tgt = qring({"c0", "c1"});

  // f = x^2, x -> t at order 2 gives t^2
  {
    TruncatedPoly t(tgt, 2);
    t.coeff(1) = Polynomial::constant(tgt, 1);
    std::map<std::string, TruncatedPoly> images{{"x", t}, {"y", t}};
    auto r = substitute(parse_polynomial(src, "x^2"), images);
    CHECK(r.coeff(0).is_zero());
    CHECK(r.coeff(1).is_zero());
    CHECK(r.coeff(2) == Polynomial::constant(tgt, 1));
  }
  // f = x^2 - y^3, x,y -> t at order 2: the cube truncates away, leaving t^2
  {
    TruncatedPoly t(tgt, 2);
    t.coeff(1) = Polynomial::constant(tgt, 1);
    std::map<std::string, TruncatedPoly> images{{"x", t}, {"y", t}};
    auto r = substitute(parse_polynomial(src, "x^2 - y^3"), images);
    CHECK(r.coeff(2) == Polynomial::constant(tgt, 1));
    CHECK(!r.is_zero());
  }
  // order-1 jet z -> c0 + c1 t: coefficient of t is f'(c0) * c1
  {
    auto zsrc = qring({"z"});
    auto f = parse_polynomial(zsrc, "z^5*(z+1)^11");
    TruncatedPoly img(tgt, 1);
    img.coeff(0) = parse_polynomial(tgt, "c0");
    img.coeff(1) = parse_polynomial(tgt, "c1");
    auto r = substitute(f, {{"z", img}});
    auto fprime = f.derivative("z");
    std::map<std::string, TruncatedPoly> c0img{
        {"z", TruncatedPoly::constant(tgt, 0, parse_polynomial(tgt, "c0"))}};
    auto expect = substitute(fprime, c0img).coeff(0) * parse_polynomial(tgt, "c1");
    CHECK(r.coeff(1) == expect);
  }
  // missing image / order mismatch rejected
  {
    TruncatedPoly t(tgt, 2), t1(tgt, 1);
    CHECK_THROWS_AS(substitute(parse_polynomial(src, "x*y"),
                               {{"x", t}}),
                    DomainError);
    CHECK_THROWS_AS(substitute(parse_polynomial(src, "x*y"),
                               {{"x", t}, {"y", t1}}),
                    DomainError);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto src = qring({"x", "y"});
  auto tgt = qring({"a", "b"});
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(rng, src, 4, 3);
    auto g = random_poly(rng, src, 4, 3);
    std::map<std::string, TruncatedPoly> images;
    for (auto name : {"x", "y"}) {
      TruncatedPoly img(tgt, 4);
      for (std::uint32_t k = 0; k <= 4; ++k)
        img.coeff(k) = random_poly(rng, tgt, 2, 2);
      images.insert({name, img});
    }
    CHECK(substitute(f * g, images) ==
          substitute(f, images) * substitute(g, images));
    CHECK(substitute(f + g, images) ==
          substitute(f, images) + substitute(g, images));
  }
}

TEST_CASE("univariate gcd and division") {
  auto ctx = qring({"z"});
  auto f = P(ctx, "z^5*(z+1)^11");
  auto g = f.derivative("z");
  auto d = poly_gcd_univariate(f, g);
  CHECK(d == P(ctx, "z^4*(z+1)^10"));
  CHECK(poly_divexact_univariate(f, d) == P(ctx, "z*(z+1)").scaled(
      FieldScalar::one(0)));
  CHECK_THROWS_AS(poly_divexact_univariate(P(ctx, "z^2+1"), P(ctx, "z+1")),
                  DomainError);
}

TEST_CASE("GF(p) scalar field") {
  auto p5 = FieldScalar::modp(5, 3);
  CHECK((p5 * p5.inverse()).is_one());
  CHECK_THROWS_AS(FieldScalar::modp(5, 0).inverse(), DomainError);
  CHECK_THROWS_AS(make_context({"x"}, OrderKind::grevlex, 6), UnsupportedError);
  auto q = FieldScalar::rational(Rat("2/4"));
  CHECK(q.to_string() == "1/2");
}
