#include "doctest.h"
#include "mason.hpp"
#include "util.hpp"

using namespace logjet;

namespace {

ContextPtr zctx() { return make_context({"z"}, OrderKind::grevlex, 0); }

Polynomial P(const ContextPtr& ctx, const std::string& s) {
  return parse_polynomial(ctx, s);
}

Polynomial random_univariate(Rng& rng, const ContextPtr& ctx, int max_deg) {
  std::vector<Polynomial::Term> terms;
  int deg = 1 + static_cast<int>(rng.below(max_deg));
  for (int k = 0; k <= deg; ++k) {
    long c = rng.range(-9, 9);
    if (k == deg && c == 0) c = 1;
    if (c != 0)
      terms.push_back({Monomial::var(0, static_cast<std::uint32_t>(k)),
                       FieldScalar::from_int(0, c)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("conductor examples") {
  auto ctx = zctx();
  auto rep = conductor(P(ctx, "z^5*(z+1)^11"));
  CHECK(rep.conductor == 2);
  CHECK(rep.squarefree_part == P(ctx, "z^2 + z"));

  CHECK(conductor(P(ctx, "17")).conductor == 0);
  for (int n = 1; n <= 10; ++n) {
    auto f = P(ctx, "z").pow(n) + P(ctx, "1");
    CHECK(conductor(f).conductor == static_cast<std::uint64_t>(n));
  }
  CHECK_THROWS_AS(conductor(Polynomial(ctx)), DomainError);
  auto gf5 = make_context({"z"}, OrderKind::grevlex, 5);
  CHECK_THROWS_AS(conductor(parse_polynomial(gf5, "z^2")), UnsupportedError);
}

TEST_CASE("squarefree machinery") {
  auto ctx = zctx();
  auto dec = squarefree_decomposition(P(ctx, "z^5*(z+1)^11*(z-3)"));
  REQUIRE(dec.size() == 11);
  CHECK(max_root_multiplicity(P(ctx, "z^5*(z+1)^11")) == 11);
  CHECK(max_root_multiplicity(P(ctx, "z^2+1")) == 1);

  auto roots = rational_roots(P(ctx, "z^5*(z+1)^11*(2*z-3)"));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].first == Rat(-1));
  CHECK(roots[0].second == 11);
  CHECK(roots[1].first == Rat(0));
  CHECK(roots[1].second == 5);
  CHECK(roots[2].first == Rat(3, 2));
  CHECK(roots[2].second == 1);
}

TEST_CASE("Mason's theorem: sharpness family and preconditions") {
  auto ctx = zctx();
  for (int n = 1; n <= 10; ++n) {
    auto f = P(ctx, "z").pow(n);
    auto g = -(P(ctx, "z").pow(n) + P(ctx, "1"));
    auto h = P(ctx, "1");
    auto rep = check_mason(f, g, h);
    REQUIRE(rep.preconditions_ok);
    CHECK(rep.max_degree == static_cast<std::uint64_t>(n));
    CHECK(rep.conductor_fgh == static_cast<std::uint64_t>(n + 1));
    CHECK(rep.inequality_holds);
    CHECK(rep.max_degree == rep.conductor_fgh - 1);  // equality: sharp
  }
  auto bad = check_mason(P(ctx, "z"), -P(ctx, "z"), Polynomial(ctx));
  CHECK_FALSE(bad.preconditions_ok);
  auto notsum = check_mason(P(ctx, "z"), P(ctx, "1"), P(ctx, "1"));
  CHECK_FALSE(notsum.preconditions_ok);
  auto shared = check_mason(P(ctx, "z^2"), P(ctx, "z"), -P(ctx, "z^2+z"));
  CHECK_FALSE(shared.preconditions_ok);
}

TEST_CASE("Mason's theorem on random coprime triples") {
  auto ctx = zctx();
  Rng rng(20240601);
  int kept = 0;
  while (kept < 200) {
    auto f = random_univariate(rng, ctx, 8);
    auto g = random_univariate(rng, ctx, 8);
    auto h = -(f + g);
    if (h.is_zero()) continue;
    auto rep = check_mason(f, g, h);
    if (!rep.preconditions_ok) continue;
    CHECK(rep.inequality_holds);
    ++kept;
  }
}

TEST_CASE("Mason corollary: sharp family and random pairs") {
  auto ctx = zctx();
  for (int n = 1; n <= 12; ++n) {
    auto f = P(ctx, "z").pow(n) + P(ctx, "1");
    auto g = -P(ctx, "1");
    auto rep = check_mason_corollary(f, g);
    REQUIRE(rep.preconditions_ok);
    CHECK(rep.conductor_fg == static_cast<std::uint64_t>(n));
    CHECK(rep.max_multiplicity == static_cast<std::uint32_t>(n));
    CHECK(rep.inequality_holds);
    REQUIRE(rep.rational_root_lines.size() == 1);
    CHECK(rep.rational_root_lines[0].root == 0);
    CHECK(rep.rational_root_lines[0].multiplicity == n);
    CHECK(rep.rational_root_lines[0].taylor_agreement == n);
  }

  auto tiny = check_mason_corollary(P(ctx, "z"), P(ctx, "-1"));
  REQUIRE(tiny.preconditions_ok);
  CHECK(tiny.conductor_fg == 1);
  CHECK(tiny.max_multiplicity == 1);
  CHECK(tiny.inequality_holds);

  Rng rng(424242);
  int kept = 0;
  while (kept < 200) {
    auto f = random_univariate(rng, ctx, 8);
    auto g = random_univariate(rng, ctx, 8);
    auto rep = check_mason_corollary(f, g);
    if (!rep.preconditions_ok) continue;
    CHECK(rep.inequality_holds);
    for (const auto& line : rep.rational_root_lines) {
      CHECK(line.multiplicity == line.taylor_agreement);
      CHECK(line.multiplicity <= rep.conductor_fg);
    }
    ++kept;
  }
}

TEST_CASE("conductor subadditivity") {
  auto ctx = zctx();
  Rng rng(777);
  for (int t = 0; t < 60; ++t) {
    auto f = random_univariate(rng, ctx, 6);
    auto g = random_univariate(rng, ctx, 6);
    if (f.is_constant() || g.is_constant()) continue;
    auto nf = conductor(f), ng = conductor(g), nfg = conductor(f * g);
    CHECK(nfg.conductor <= nf.conductor + ng.conductor);
    bool shared =
        !poly_gcd_univariate(nf.squarefree_part, ng.squarefree_part)
             .is_constant();
    CHECK((nfg.conductor == nf.conductor + ng.conductor) == !shared);
  }
}

TEST_CASE("pullback bound: the two-variable sharpness family") {
  auto actx = make_context({"x", "y"}, OrderKind::grevlex, 0);
  auto line = zctx();
  for (int N = 1; N <= 10; ++N) {
    PuncturedLineMorphism j;
    j.line = line;
    auto zN = P(line, "z").pow(N);
    auto zshift = (P(line, "z") - P(line, "1")).pow(N);
    j.images = {zN - zshift, zN};
    j.locus = P(line, "z") * (zN - zshift);
    auto rep =
        pullback_order_bound(P(actx, "y"), P(actx, "-x"), j);
    REQUIRE(rep.preconditions_ok);
    CHECK_FALSE(rep.contained);
    CHECK(rep.bound == static_cast<std::uint64_t>(N));
    CHECK(rep.max_order == static_cast<std::uint32_t>(N));
    CHECK(rep.inequality_holds);
    bool found_one = false;
    for (const auto& l : rep.rational_root_lines)
      if (l.root == 1 && l.multiplicity == static_cast<std::uint32_t>(N))
        found_one = true;
    CHECK(found_one);
  }
}

TEST_CASE("pullback bound: containment branch and unit verification") {
  auto actx = make_context({"x", "y"}, OrderKind::grevlex, 0);
  auto line = zctx();
  PuncturedLineMorphism j;
  j.line = line;
  j.images = {P(line, "z"), -P(line, "z")};
  j.locus = P(line, "z");
  auto rep = pullback_order_bound(P(actx, "y"), P(actx, "x"), j);
  REQUIRE(rep.preconditions_ok);
  CHECK(rep.contained);

  // image vanishing off the removed locus is rejected
  PuncturedLineMorphism bad;
  bad.line = line;
  bad.images = {P(line, "z - 5"), P(line, "z")};
  bad.locus = P(line, "z");
  auto rep2 = pullback_order_bound(P(actx, "x"), P(actx, "y"), bad);
  CHECK_FALSE(rep2.preconditions_ok);
  CHECK(rep2.precondition_failure.find("not a unit") != std::string::npos);
}

TEST_CASE("pullback bound on the identity morphism matches the corollary") {
  auto actx = make_context({"w"}, OrderKind::grevlex, 0);
  auto line = zctx();
  Rng rng(1001);
  int kept = 0;
  while (kept < 25) {
    auto f = random_univariate(rng, actx, 5);
    auto g = random_univariate(rng, actx, 5);
    auto cor = check_mason_corollary(f, g);
    if (!cor.preconditions_ok) continue;
    if ((f + g).is_constant()) continue;

    PuncturedLineMorphism j;
    j.line = line;
    j.images = {P(line, "z")};
    // rename f*g into the line context for the locus
    j.locus = (f * g).rename(line, {0});
    auto rep = pullback_order_bound(f, g, j);
    REQUIRE(rep.preconditions_ok);
    CHECK(rep.inequality_holds);
    CHECK(rep.bound == cor.conductor_fg);
    // same rational roots with the same multiplicities
    CHECK(rep.rational_root_lines.size() == cor.rational_root_lines.size());
    for (std::size_t i = 0; i < rep.rational_root_lines.size(); ++i) {
      CHECK(rep.rational_root_lines[i].root == cor.rational_root_lines[i].root);
      CHECK(rep.rational_root_lines[i].multiplicity ==
            cor.rational_root_lines[i].multiplicity);
    }
    ++kept;
  }
}

TEST_CASE("projective gluing") {
  // P^1, f = x0: single overlap
  auto p1 = make_context({"x0", "x1"}, OrderKind::grevlex, 0);
  auto rep1 = verify_projective_gluing(P(p1, "x0"));
  CHECK(rep1.glues);
  CHECK(rep1.pair_lines.size() == 1);

  // P^2, f = x0^2 x2 - x1^3: three overlaps
  auto p2 = make_context({"x0", "x1", "x2"}, OrderKind::grevlex, 0);
  auto rep2 = verify_projective_gluing(P(p2, "x0^2*x2 - x1^3"));
  CHECK(rep2.glues);
  CHECK(rep2.pair_lines.size() == 3);

  // corrupted omega_i misses the m del(x_n/x_i) term and must fail
  auto rep3 = verify_projective_gluing(P(p2, "x0^2*x2 - x1^3"), true);
  CHECK_FALSE(rep3.glues);

  CHECK_THROWS_AS(verify_projective_gluing(P(p2, "x0 + x1^2")), DomainError);
  CHECK_THROWS_AS(verify_projective_gluing(P(p2, "1")), DomainError);
}
