#include "suite.hpp"

#include <functional>
#include <sstream>

#include "jets.hpp"
#include "mason.hpp"
#include "mult.hpp"

namespace logjet {

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t a = part.find_first_not_of(" \t");
    std::size_t b = part.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(part.substr(a, b - a + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

CommandResult rejected(const std::string& why) {
  CommandResult r;
  r.exit_code = 2;
  r.text = "rejected: " + why + "\n";
  r.put("status", "rejected");
  r.put("reason", why);
  return r;
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return rejected(e.what());
  }
}

}  // namespace

std::string CommandResult::render(bool machine_format) const {
  if (!machine_format) return text;
  std::string s;
  for (const auto& [k, v] : machine) s += k + "=" + v + "\n";
  s += "exit=" + std::to_string(exit_code) + "\n";
  return s;
}

CommandResult cmd_hs(const std::string& file_text, const FileReader& reader,
                     std::uint32_t order, bool show_omega, std::uint32_t cap) {
  return guarded([&] {
    CommandResult r;
    PresentationFile file = parse_presentation(file_text);
    LogAlgebraPresentation alg = file.to_algebra(reader);
    HSPresentation::BuildOptions opts;
    opts.embedded = file.embedded;
    opts.order_cap = cap;
    auto hs = HSPresentation::build(alg, order, opts);
    r.text = hs.print();
    r.put("order", std::to_string(order));
    r.put("mode", file.embedded ? "embedded" : "strict");
    r.put("symbols", std::to_string(hs.symbol_context()->nvars()));
    std::size_t i = 0;
    for (const auto& g : hs.ring()->basis())
      r.put("basis" + std::to_string(i++), g.to_string());
    if (show_omega && order == 1) {
      auto om = hs.omega();
      r.text += om.to_string();
      r.put("omega_rank", std::to_string(om.rank()));
    }
    return r;
  });
}

CommandResult cmd_mult(const std::string& file_text, const FileReader& reader,
                       const std::string& vars_csv,
                       const std::string& equation_text,
                       const std::string& point_csv, std::uint32_t cap) {
  return guarded([&] {
    CommandResult r;
    RingPtr ambient;
    if (!file_text.empty()) {
      PresentationFile file = parse_presentation(file_text);
      auto alg = file.to_algebra(reader);
      ambient = alg.total.ring;
    } else {
      auto vars = split_csv(vars_csv);
      if (vars.empty()) return rejected("no ambient given (file or vars)");
      ambient = make_ring(make_context(vars, OrderKind::grevlex, 0), {});
    }
    Polynomial s = parse_polynomial(ambient->context(), equation_text);
    RationalPoint p = RationalPoint::parse(ambient->context(), point_csv);
    r.put("equation", s.to_string());
    r.put("point", p.to_string());

    if (ambient->contains(s)) {
      r.text = "mult = infinity (equation vanishes on the ambient)\n";
      r.put("mult", "infinity");
      return r;
    }
    DivisorRep d{s, ambient};
    auto jets = multiplicity_via_jets(d, p, cap);
    bool free_ambient = ambient->ideal().generators.empty();
    if (free_ambient) {
      auto taylor = taylor_multiplicity(d, p);
      r.text = "mult = " + std::to_string(*taylor) + " (taylor) / " +
               (jets.capped ? ">= " + std::to_string(jets.value)
                            : std::to_string(jets.value)) +
               " (jets)\n";
      r.put("taylor", std::to_string(*taylor));
      r.put("jets", jets.capped ? ">=" + std::to_string(jets.value)
                                : std::to_string(jets.value));
      bool agree = !jets.capped && jets.value == *taylor;
      r.put("agree", agree ? "true" : "false");
      if (!agree && !jets.capped) r.exit_code = 1;
    } else {
      r.text = jets.to_string() + " (jets; ambient is a hypersurface)\n";
      r.put("jets", jets.capped ? ">=" + std::to_string(jets.value)
                                : std::to_string(jets.value));
    }
    if (jets.witness) {
      r.put("witness_order", std::to_string(jets.witness->order));
      r.put("witness", jets.witness->coefficient.to_string());
    }
    return r;
  });
}

namespace {

ContextPtr line_context(const std::string& var) {
  return make_context({var.empty() ? "z" : var}, OrderKind::grevlex, 0);
}

}  // namespace

CommandResult cmd_mason_conductor(const std::string& poly_text,
                                  const std::string& var) {
  return guarded([&] {
    CommandResult r;
    auto ctx = line_context(var);
    auto rep = conductor(parse_polynomial(ctx, poly_text));
    r.text = "N(f) = " + std::to_string(rep.conductor) +
             ", squarefree part = " + rep.squarefree_part.to_string() + "\n";
    r.put("conductor", std::to_string(rep.conductor));
    r.put("squarefree", rep.squarefree_part.to_string());
    return r;
  });
}

CommandResult cmd_mason_theorem(const std::string& f_text,
                                const std::string& g_text,
                                const std::string& h_text,
                                const std::string& var) {
  return guarded([&] {
    CommandResult r;
    auto ctx = line_context(var);
    auto rep = check_mason(parse_polynomial(ctx, f_text),
                           parse_polynomial(ctx, g_text),
                           parse_polynomial(ctx, h_text));
    r.text = rep.to_string() + "\n";
    if (!rep.preconditions_ok) return rejected(rep.precondition_failure);
    r.put("max_deg", std::to_string(rep.max_degree));
    r.put("conductor", std::to_string(rep.conductor_fgh));
    r.put("holds", rep.inequality_holds ? "true" : "false");
    if (!rep.inequality_holds) r.exit_code = 1;
    return r;
  });
}

CommandResult cmd_mason_corollary(const std::string& f_text,
                                  const std::string& g_text,
                                  const std::string& var) {
  return guarded([&] {
    CommandResult r;
    auto ctx = line_context(var);
    auto rep = check_mason_corollary(parse_polynomial(ctx, f_text),
                                     parse_polynomial(ctx, g_text));
    r.text = rep.to_string() + "\n";
    if (!rep.preconditions_ok) return rejected(rep.precondition_failure);
    r.put("max_mult", std::to_string(rep.max_multiplicity));
    r.put("conductor", std::to_string(rep.conductor_fg));
    r.put("holds", rep.inequality_holds ? "true" : "false");
    for (const auto& line : rep.rational_root_lines)
      r.put("root_" + line.root.get_str(),
            "mult=" + std::to_string(line.multiplicity) +
                " taylor=" + std::to_string(line.taylor_agreement));
    if (!rep.inequality_holds) r.exit_code = 1;
    return r;
  });
}

CommandResult cmd_mason_pullback(const std::string& f_text,
                                 const std::string& g_text,
                                 const std::string& vars_csv,
                                 const std::string& images_semicolon,
                                 const std::string& locus_text,
                                 const std::string& var) {
  return guarded([&] {
    CommandResult r;
    auto vars = split_csv(vars_csv);
    if (vars.empty()) return rejected("ambient variables required");
    auto actx = make_context(vars, OrderKind::grevlex, 0);
    PuncturedLineMorphism j;
    j.line = line_context(var);
    std::size_t pos = 0;
    std::string imgs = images_semicolon;
    while (pos <= imgs.size()) {
      std::size_t semi = imgs.find(';', pos);
      std::string part = imgs.substr(
          pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (!part.empty()) j.images.push_back(parse_polynomial(j.line, part));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    j.locus = parse_polynomial(j.line, locus_text);
    auto rep = pullback_order_bound(parse_polynomial(actx, f_text),
                                    parse_polynomial(actx, g_text), j);
    r.text = rep.to_string() + "\n";
    if (!rep.preconditions_ok) return rejected(rep.precondition_failure);
    r.put("bound", std::to_string(rep.bound));
    r.put("contained", rep.contained ? "true" : "false");
    if (!rep.contained) {
      r.put("max_ord", std::to_string(rep.max_order));
      r.put("holds", rep.inequality_holds ? "true" : "false");
      if (!rep.inequality_holds) r.exit_code = 1;
    }
    return r;
  });
}

CommandResult cmd_glue(const std::string& poly_text,
                       const std::string& vars_csv, bool corrupt) {
  return guarded([&] {
    CommandResult r;
    auto vars = split_csv(vars_csv);
    if (vars.size() < 2) return rejected("need at least two coordinates");
    auto ctx = make_context(vars, OrderKind::grevlex, 0);
    auto rep =
        verify_projective_gluing(parse_polynomial(ctx, poly_text), corrupt);
    r.text = rep.to_string() + "\n";
    r.put("glues", rep.glues ? "true" : "false");
    for (std::size_t i = 0; i < rep.pair_lines.size(); ++i)
      r.put("pair" + std::to_string(i), rep.pair_lines[i]);
    if (!rep.glues) r.exit_code = 1;
    return r;
  });
}

// ---------------------------------------------------------------------------
// the worked-example suite

namespace {

struct SuiteCase {
  std::string id;
  std::string source;  // which worked example or statement it reproduces
  std::function<std::pair<bool, std::string>(std::uint64_t)> run;
};

ContextPtr q1(const std::string& v) {
  return make_context({v}, OrderKind::grevlex, 0);
}

Polynomial P(const ContextPtr& c, const std::string& s) {
  return parse_polynomial(c, s);
}

LogAlgebraPresentation cusp_algebra() {
  auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
  auto ring = make_ring(ctx, {P(ctx, "x^2 - y^3")});
  PreLogStructure total;
  total.monoid = MonoidPresentation::free_monoid({"mx", "my"});
  total.ring = ring;
  total.alpha = {P(ctx, "x"), P(ctx, "y")};
  return LogAlgebraPresentation::over_scalars(std::move(total));
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

std::vector<SuiteCase> suite_cases() {
  std::vector<SuiteCase> cases;
  auto add = [&](std::string id, std::string source, auto fn) {
    cases.push_back({std::move(id), std::move(source), fn});
  };

  add("abc.conductor_example", "conductor of z^5 (z+1)^11",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = q1("z");
        auto rep = conductor(P(ctx, "z^5*(z+1)^11"));
        bool ok = rep.conductor == 2;
        auto ring = make_ring(ctx, {});
        DivisorRep d{P(ctx, "z^5*(z+1)^11"), ring};
        ok = ok && *taylor_multiplicity(
                       d, RationalPoint{{FieldScalar::rational(0)}}) == 5;
        ok = ok && *taylor_multiplicity(
                       d, RationalPoint{{FieldScalar::rational(-1)}}) == 11;
        ok = ok &&
             multiplicity_via_jets(d, RationalPoint{{FieldScalar::rational(0)}},
                                   8)
                     .value == 5;
        ok = ok && multiplicity_via_jets(
                       d, RationalPoint{{FieldScalar::rational(-1)}}, 13)
                           .value == 11;
        return {ok, "N=2, mult_0=5, mult_-1=11, both engines"};
      });

  add("abc.mason_sharpness", "Mason equality family z^n + (z^n+1) = ...",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = q1("z");
        for (int n = 1; n <= 10; ++n) {
          auto f = P(ctx, "z").pow(n);
          auto g = -(P(ctx, "z").pow(n) + P(ctx, "1"));
          auto rep = check_mason(f, g, P(ctx, "1"));
          if (!rep.preconditions_ok || !rep.inequality_holds ||
              rep.max_degree != rep.conductor_fgh - 1)
            return {false, "failure at n=" + std::to_string(n)};
        }
        return {true, "equality attained for n = 1..10"};
      });

  add("abc.corollary_sharpness", "f - g = z^n with multiplicity N(fg)",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = q1("z");
        for (int n = 1; n <= 12; ++n) {
          auto f = P(ctx, "z").pow(n) + P(ctx, "1");
          auto rep = check_mason_corollary(f, -P(ctx, "1"));
          if (!rep.preconditions_ok || !rep.inequality_holds) return {false, ""};
          if (rep.conductor_fg != static_cast<std::uint64_t>(n)) return {false, ""};
          if (rep.max_multiplicity != static_cast<std::uint32_t>(n))
            return {false, "multiplicity mismatch at n=" + std::to_string(n)};
        }
        return {true, "mult_0(f-g) = N(fg) = n for n = 1..12"};
      });

  add("abc.mason_random", "randomized Mason theorem and corollary",
      [](std::uint64_t seed) -> std::pair<bool, std::string> {
        auto ctx = q1("z");
        Rng rng(seed);
        int kept = 0;
        while (kept < 200) {
          auto f = random_univariate(rng, ctx, 8);
          auto g = random_univariate(rng, ctx, 8);
          auto h = -(f + g);
          if (h.is_zero()) continue;
          auto t = check_mason(f, g, h);
          auto c = check_mason_corollary(f, g);
          if (!t.preconditions_ok || !c.preconditions_ok) continue;
          if (!t.inequality_holds)
            return {false, "theorem violated: f=" + f.to_string() +
                               " g=" + g.to_string()};
          if (!c.inequality_holds)
            return {false, "corollary violated: f=" + f.to_string() +
                               " g=" + g.to_string()};
          ++kept;
        }
        return {true, "200 coprime pairs checked"};
      });

  add("abc.pullback_sharpness", "x -> z^N - (z-1)^N, y -> z^N",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto actx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto line = q1("z");
        for (int N = 1; N <= 10; ++N) {
          PuncturedLineMorphism j;
          j.line = line;
          auto zN = P(line, "z").pow(N);
          auto zs = (P(line, "z") - P(line, "1")).pow(N);
          j.images = {zN - zs, zN};
          j.locus = P(line, "z") * (zN - zs);
          auto rep = pullback_order_bound(P(actx, "y"), P(actx, "-x"), j);
          if (!rep.preconditions_ok || rep.contained) return {false, ""};
          if (rep.bound != static_cast<std::uint64_t>(N) ||
              rep.max_order != static_cast<std::uint32_t>(N) ||
              !rep.inequality_holds)
            return {false, "bound not attained at N=" + std::to_string(N)};
        }
        return {true, "ord_1 j*(y-x) = N = #removed points, N = 1..10"};
      });

  add("abc.pullback_identity", "identity morphism reproduces the corollary",
      [](std::uint64_t seed) -> std::pair<bool, std::string> {
        auto actx = make_context({"w"}, OrderKind::grevlex, 0);
        auto line = q1("z");
        Rng rng(seed + 1);
        int kept = 0;
        while (kept < 25) {
          auto f = random_univariate(rng, actx, 5);
          auto g = random_univariate(rng, actx, 5);
          auto cor = check_mason_corollary(f, g);
          if (!cor.preconditions_ok || (f + g).is_constant()) continue;
          PuncturedLineMorphism j;
          j.line = line;
          j.images = {P(line, "z")};
          j.locus = (f * g).rename(line, {0});
          auto rep = pullback_order_bound(f, g, j);
          if (!rep.preconditions_ok || !rep.inequality_holds)
            return {false, "identity pullback failed"};
          if (rep.rational_root_lines.size() != cor.rational_root_lines.size())
            return {false, "root sets differ"};
          for (std::size_t i = 0; i < rep.rational_root_lines.size(); ++i)
            if (rep.rational_root_lines[i].multiplicity !=
                cor.rational_root_lines[i].multiplicity)
              return {false, "multiplicities differ"};
          ++kept;
        }
        return {true, "25 identity pullbacks agree with the corollary"};
      });

  add("monoid.amalgam_direct_sum", "trivial gluing gives the direct sum",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto p = MonoidPresentation::free_group({});
        auto q1m = MonoidPresentation::free_monoid({"a", "b"});
        auto q2m = MonoidPresentation::free_monoid({"c"});
        MonoidMorphism u1{&p, &q1m, {}};
        MonoidMorphism u2{&p, &q2m, {}};
        auto sum = amalgamated_sum(p, q1m, q2m, u1, u2);
        return {sum.ngens() == 3 && sum.relations.empty(),
                "Q1 + Q2 with no relations"};
      });

  add("monoid.amalgam_universal", "factoring morphism h(q1,q2) = w1(q1)+w2(q2)",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto p = MonoidPresentation::free_group({"p"});
        auto q1m = MonoidPresentation::free_monoid({"a", "b"});
        auto q2m = MonoidPresentation::free_group({"zz"});
        MonoidMorphism u1{&p, &q1m, {IntVec{Int(1), Int(1)}}};
        MonoidMorphism u2{&p, &q2m, {IntVec{Int(1)}}};
        auto sum = amalgamated_sum(p, q1m, q2m, u1, u2);
        auto target = MonoidPresentation::free_group({"e1", "e2"});
        MonoidMorphism w1{&q1m, &target,
                          {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}}};
        MonoidMorphism w2{&q2m, &target, {IntVec{Int(1), Int(1)}}};
        auto h = amalgam_factor(sum, w1, w2);
        bool ok = h.respects_relations();
        ok = ok && h.apply(IntVec{Int(1), Int(0), Int(0)}) ==
                       w1.apply(IntVec{Int(1), Int(0)});
        ok = ok && h.apply(IntVec{Int(0), Int(0), Int(1)}) ==
                       w2.apply(IntVec{Int(1)});
        return {ok, "cone factors through the amalgamated sum"};
      });

  add("monoid.group_of_units", "units of N^2, Z and N^2/(a+b=0)",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto n2 = MonoidPresentation::free_monoid({"a", "b"});
        if (group_of_units(n2).ngens() != 0) return {false, "N^2"};
        auto z = MonoidPresentation::free_group({"t"});
        if (group_invariants(group_of_units(z)).free_rank != 1)
          return {false, "Z"};
        MonoidPresentation m = MonoidPresentation::free_monoid({"a", "b"});
        m.relations.push_back({IntVec{Int(1), Int(1)}, IntVec{Int(0), Int(0)}});
        auto u = group_of_units(m);
        auto inv = group_invariants(u);
        return {u.ngens() == 2 && inv.free_rank == 1 && inv.torsion.empty(),
                "unit groups match"};
      });

  add("monoid.associated_log", "log structure of x and y - x^2 on k[x,y]",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto ring = make_ring(ctx, {});
        PreLogStructure pre;
        pre.monoid = MonoidPresentation::free_monoid({"mx", "my"});
        pre.ring = ring;
        pre.alpha = {P(ctx, "x"), P(ctx, "y - x^2")};
        auto log = AssociatedLog::build(pre);
        auto one = Polynomial::constant(ctx, 1);
        bool ok = log.elements_equal(IntVec{Int(1), Int(1)}, one,
                                     IntVec{Int(1), Int(1)}, one);
        ok = ok && !log.elements_equal(IntVec{Int(1), Int(0)}, one,
                                       IntVec{Int(0), Int(1)}, one);
        return {ok, "alpha((m,n),c) = c x^m (y-x^2)^n"};
      });

  add("monoid.submonoid_equality", "x^2 = y^3 in the submonoid of C",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto ring = make_ring(ctx, {P(ctx, "x^2 - y^3")});
        PreLogStructure pre;
        pre.monoid = MonoidPresentation::free_monoid({"mx", "my"});
        pre.ring = ring;
        pre.alpha = {P(ctx, "x"), P(ctx, "y")};
        auto log = AssociatedLog::build(pre);
        auto one = Polynomial::constant(ctx, 1);
        bool ok = log.elements_equal(IntVec{Int(2), Int(0)}, one,
                                     IntVec{Int(0), Int(3)}, one);
        ok = ok && !log.elements_equal(IntVec{Int(1), Int(0)}, one,
                                       IntVec{Int(0), Int(1)}, one);
        return {ok, "(2 e_x, 1) = (3 e_y, 1) via ring equality"};
      });

  add("monoid.localized_log_algebra", "localize the cusp log algebra at x, y",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        auto ctx = alg.total.ring->context();
        auto loc = localize_log_algebra(
            alg, {P(ctx, "x"), P(ctx, "y")});
        bool ok = loc.generator_is_unit[0] && loc.generator_is_unit[1];
        auto loc1 = localize_log_algebra(alg, {P(ctx, "1")});
        ok = ok && !loc1.generator_is_unit[0];
        return {ok, "log generators become units exactly after inverting"};
      });

  add("deriv.truncated_unit_law", "monoid law on M-hat: alpha-hat multiplicative",
      [](std::uint64_t seed) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        const auto& ring = alg.total.ring;
        Rng rng(seed + 2);
        auto rnd = [&]() {
          Polynomial p = Polynomial::constant(ring->context(), rng.range(-2, 2));
          if (rng.below(2))
            p = p + P(ring->context(), "x").scaled(
                        FieldScalar::from_int(0, rng.range(-2, 2)));
          if (rng.below(2))
            p = p + P(ring->context(), "y").scaled(
                        FieldScalar::from_int(0, rng.range(-2, 2)));
          return p;
        };
        for (int t = 0; t < 100; ++t) {
          TruncatedLogUnit a = TruncatedLogUnit::identity(alg.total, 3);
          TruncatedLogUnit b = TruncatedLogUnit::identity(alg.total, 3);
          for (int i = 0; i < 3; ++i) {
            a.tail[i] = rnd();
            b.tail[i] = rnd();
          }
          a.monoid_part = {Int(static_cast<long>(rng.below(3))),
                           Int(static_cast<long>(rng.below(3)))};
          b.monoid_part = {Int(static_cast<long>(rng.below(3))),
                           Int(static_cast<long>(rng.below(3)))};
          auto lhs = log_unit_mul(a, b).alpha_hat();
          auto rhs = a.alpha_hat() * b.alpha_hat();
          for (std::uint32_t i = 0; i <= 3; ++i)
            if (!ring->contains(lhs.coeff(i) - rhs.coeff(i)))
              return {false, "alpha-hat not multiplicative"};
        }
        return {true, "100 random pairs at order 3, exact"};
      });

  add("deriv.axioms", "random valid jets satisfy axioms i-v",
      [](std::uint64_t seed) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        auto k = make_scalar_ring(0);
        auto kc = k->context();
        Rng rng(seed + 3);
        int done = 0;
        while (done < 50) {
          // arcs through the cusp via the parametrization (s^3, s^2)
          Rat s(rng.range(1, 5), 1 + static_cast<long>(rng.below(3)));
          auto sctx = q1("s");
          TruncatedPoly arc(sctx, 2);
          arc.coeff(0) = Polynomial::constant(
              sctx, FieldScalar::rational(s));
          arc.coeff(1) = Polynomial::constant(sctx, rng.range(-3, 3));
          arc.coeff(2) = Polynomial::constant(sctx, rng.range(-3, 3));
          auto to_k = [&](const Polynomial& p) {
            return Polynomial::constant(kc, p.constant_term());
          };
          TruncatedPoly jx(kc, 2), jy(kc, 2);
          auto x_arc = arc.pow(3);
          auto y_arc = arc.pow(2);
          for (std::uint32_t i = 0; i <= 2; ++i) {
            jx.coeff(i) = to_k(x_arc.coeff(i));
            jy.coeff(i) = to_k(y_arc.coeff(i));
          }
          JetMorphismData jet;
          jet.alg = &alg;
          jet.target = k;
          jet.order = 2;
          jet.ring_images = {jx, jy};
          PreLogStructure tl;
          tl.monoid = MonoidPresentation::free_monoid({"mx", "my"});
          tl.ring = k;
          tl.alpha = {jx.coeff(0), jy.coeff(0)};
          TruncatedLogUnit lx = TruncatedLogUnit::identity(tl, 2);
          lx.monoid_part = {Int(1), Int(0)};
          TruncatedLogUnit ly = lx;
          ly.monoid_part = {Int(0), Int(1)};
          FieldScalar x0 = jx.coeff(0).constant_term();
          FieldScalar y0 = jy.coeff(0).constant_term();
          lx.tail[0] = jx.coeff(1).scaled(x0.inverse());
          lx.tail[1] = jx.coeff(2).scaled(x0.inverse());
          ly.tail[0] = jy.coeff(1).scaled(y0.inverse());
          ly.tail[1] = jy.coeff(2).scaled(y0.inverse());
          jet.log_images = {lx, ly};
          std::string w;
          if (!jet.validate(&w)) return {false, "jet invalid: " + w};
          auto d = jet_to_derivation(jet);
          auto rep = check_derivation_axioms(d, seed + done, 8);
          if (!rep.all_pass()) return {false, "axiom failure"};
          ++done;
        }
        return {true, "50 random arcs on the cusp, axioms i-v hold"};
      });

  add("deriv.prolongation_welldefined", "d maps the order-n ideal into the order-(n+1) ideal",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        for (std::uint32_t n = 1; n <= 3; ++n) {
          HSPresentation::BuildOptions opts;
          auto at = HSPresentation::build(alg, n, opts);
          auto next = HSPresentation::build(alg, n + 1, opts);
          std::string w;
          if (!check_d_well_defined(at, next, &w))
            return {false, "failure at order " + std::to_string(n)};
        }
        for (std::uint32_t n = 1; n <= 2; ++n) {
          HSPresentation::BuildOptions opts;
          opts.embedded = true;
          auto at = HSPresentation::build(alg, n, opts);
          auto next = HSPresentation::build(alg, n + 1, opts);
          std::string w;
          if (!check_d_well_defined(at, next, &w))
            return {false, "embedded failure at order " + std::to_string(n)};
        }
        return {true, "strict n = 1..3 and embedded n = 1..2"};
      });

  add("deriv.generation_step", "(n+1) d_{n+1} b = d(d_n b) in characteristic 0",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        for (std::uint32_t n : {1u, 2u}) {
          auto rep = check_generation_step(alg, n);
          if (!rep.holds || rep.char_regime)
            return {false, "failure at n = " + std::to_string(n)};
        }
        return {true, "identities hold modulo the ideal for n = 1, 2"};
      });

  add("deriv.generation_step_gf2", "GF(2): d(d_1 x) = 0, generation degenerates",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto gf2 = make_context({"x"}, OrderKind::grevlex, 2);
        auto alg = LogAlgebraPresentation::over_scalars(
            PreLogStructure::trivial(make_ring(gf2, {})));
        auto h1 = HSPresentation::build(alg, 1);
        auto h2 = HSPresentation::build(alg, 2);
        auto dd = h1.apply_d(
            parse_polynomial(h1.symbol_context(), "d1_x"), h2);
        auto rep = check_generation_step(alg, 1);
        bool ok = dd.is_zero() && rep.char_regime && rep.holds;
        return {ok, "characteristic-2 regime flagged, not failed"};
      });

  add("deriv.log_derivative_shape", "d(del_1 f) matches the log-derivative shape",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = q1("x");
        PreLogStructure total;
        total.monoid = MonoidPresentation::free_monoid({"m"});
        total.ring = make_ring(ctx, {});
        total.alpha = {P(ctx, "x")};
        auto alg = LogAlgebraPresentation::over_scalars(total);
        auto h1 = HSPresentation::build(alg, 1);
        auto h2 = HSPresentation::build(alg, 2);
        auto lhs = h1.apply_d(
            parse_polynomial(h1.symbol_context(), "del1_m"), h2);
        auto real = h2.to_localized(lhs);
        const auto& ectx = h2.localized_embedding().extended().context();
        auto expect = parse_polynomial(ectx, "2*u1*d2_x - u1^2*d1_x^2");
        bool ok = h2.localized_embedding().extended().contains(real - expect);
        return {ok, "2 d2 a / a - (d1 a / a)^2 reduces against rule iv"};
      });

  add("hs.free_ring", "free polynomial ring has a free jet presentation",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto alg = LogAlgebraPresentation::over_scalars(
            PreLogStructure::trivial(make_ring(ctx, {})));
        auto h2 = HSPresentation::build(alg, 2);
        return {h2.ring()->basis().empty() && h2.symbol_context()->nvars() == 6,
                "k[x, y, d_q x, d_q y], empty ideal"};
      });

  add("hs.cusp_log_jets", "HS^1 of the cusp with log generators x, y",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        HSPresentation::BuildOptions opts;
        opts.embedded = true;
        auto hs = HSPresentation::build(alg, 1, opts);
        auto c = hs.symbol_context();
        bool ok = hs.ring()->contains(P(c, "2*del1_mx - 3*del1_my"));
        ok = ok && hs.ring()->contains(P(c, "d1_x - x*del1_mx"));
        ok = ok && hs.omega().rank() == 1;
        ok = ok && hs.ideal_is_homogeneous();
        return {ok, "k[x, y, del x]/(x^2 - y^3): rank-1 differentials"};
      });

  add("hs.zero_divisor_artifact", "zero-divisor artifact and its localization fix",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        auto hs = HSPresentation::build(alg, 1);  // strict: naive quotient
        auto c = hs.symbol_context();
        bool ok = hs.ring()->contains(P(c, "x^2*(2*del1_mx - 3*del1_my)"));
        ok = ok && !hs.ring()->contains(P(c, "2*del1_mx - 3*del1_my"));
        // localization at the log generators recovers the clean relation
        ok = ok && hs.localized_embedding().extended().contains(
                       hs.to_localized(P(c, "2*del1_mx - 3*del1_my")));
        return {ok, "x^2 (2 del x - 3 del y) in, 2 del x - 3 del y out, "
                    "localization fixes it"};
      });

  add("hs.second_exact_sequence", "HS of a strict quotient",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto b_alg = LogAlgebraPresentation::over_scalars(
            PreLogStructure::trivial(make_ring(ctx, {})));
        for (std::uint32_t n : {1u, 2u}) {
          auto rep = check_second_exact_sequence(
              b_alg, {P(ctx, "x^2 - y^3")}, n);
          if (!rep.exact) return {false, "order " + std::to_string(n)};
        }
        return {true, "quotient ideal = base ideal + prolonged kernel, n=1,2"};
      });

  add("hs.first_exact_sequence", "k -> k[x] -> k[x,y] at order 2",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto c_alg = LogAlgebraPresentation::over_scalars(
            PreLogStructure::trivial(make_ring(ctx, {})));
        auto b_ring = make_ring(q1("x"), {});
        RingMorphism b_to_c{b_ring, c_alg.total.ring, {P(ctx, "x")}};
        auto rep = check_first_exact_sequence(c_alg, b_to_c, 2);
        return {rep.exact, "relative ideal kills d_i x, exactly"};
      });

  add("hs.base_localization", "HS is invariant under base localization",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto bctx = make_context({"a", "ai"}, OrderKind::grevlex, 0);
        auto b_ring = make_ring(bctx, {P(bctx, "a*ai - 1")});
        auto a_ring = make_ring(q1("a"), {});
        auto sctx = make_context({"a", "t"}, OrderKind::grevlex, 0);
        auto s_ring = make_ring(sctx, {P(sctx, "a*t - 1")});
        LogAlgebraPresentation over_a;
        over_a.base = PreLogStructure::trivial(a_ring);
        over_a.total = PreLogStructure::trivial(b_ring);
        over_a.structure_map = RingMorphism{a_ring, b_ring, {P(bctx, "a")}};
        over_a.bind();
        LogAlgebraPresentation over_sa;
        over_sa.base = PreLogStructure::trivial(s_ring);
        over_sa.total = PreLogStructure::trivial(b_ring);
        over_sa.structure_map =
            RingMorphism{s_ring, b_ring, {P(bctx, "a"), P(bctx, "ai")}};
        over_sa.bind();
        for (std::uint32_t n : {1u, 2u}) {
          auto h_a = HSPresentation::build(over_a, n);
          auto h_sa = HSPresentation::build(over_sa, n);
          if (!ideal_equal(*h_a.ring(), *h_sa.ring()))
            return {false, "order " + std::to_string(n)};
        }
        return {true, "equal ideals over A and over S^{-1}A"};
      });

  add("morphism.substitution_jet", "u(x)^2 - u(y)^3 = t^2 for x, y -> t",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto src = make_context({"x", "y"}, OrderKind::grevlex, 0);
        auto tgt = make_scalar_ring(0)->context();
        TruncatedPoly t(tgt, 2);
        t.coeff(1) = Polynomial::constant(tgt, 1);
        std::map<std::string, TruncatedPoly> images{{"x", t}, {"y", t}};
        auto r = substitute(P(src, "x^2 - y^3"), images);
        bool ok = r.coeff(0).is_zero() && r.coeff(1).is_zero() &&
                  r.coeff(2) == Polynomial::constant(tgt, 1);
        return {ok, "the obstruction t^2 survives truncation at order 2"};
      });

  add("morphism.log_square", "f(x) = f(y) = t commutes with alpha",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto alg = cusp_algebra();
        auto tctx = q1("t");
        auto dual = make_ring(tctx, {P(tctx, "t^2")});
        PreLogStructure tlog;
        tlog.monoid = MonoidPresentation::free_monoid({"mt"});
        tlog.ring = dual;
        tlog.alpha = {P(tctx, "t")};
        LogAlgebraPresentation f;
        f.base = alg.total;
        f.total = tlog;
        f.structure_map = RingMorphism{alg.total.ring, dual,
                                       {P(tctx, "t"), P(tctx, "t")}};
        f.bind();
        f.monoid_map.images = {IntVec{Int(1)}, IntVec{Int(1)}};
        bool ok = f.structure_map.well_defined() && f.square_commutes();
        LogAlgebraPresentation broken = f;
        broken.bind();
        broken.total.alpha = {P(tctx, "t + 1")};
        ok = ok && !broken.square_commutes();
        return {ok, "square commutes; corrupted alpha detected"};
      });

  add("mult.jet_oracle", "jet multiplicity equals shift multiplicity",
      [](std::uint64_t seed) -> std::pair<bool, std::string> {
        Rng rng(seed + 4);
        auto ctx = make_context({"x", "y", "z"}, OrderKind::grevlex, 0);
        auto ring = make_ring(ctx, {});
        int done = 0;
        while (done < 300) {
          std::uint32_t target = 1 + static_cast<std::uint32_t>(rng.below(5));
          RationalPoint p{{FieldScalar::from_int(0, rng.range(-2, 2)),
                           FieldScalar::from_int(0, rng.range(-2, 2)),
                           FieldScalar::from_int(0, rng.range(-2, 2))}};
          std::vector<Polynomial> shift;
          for (std::uint32_t v = 0; v < 3; ++v)
            shift.push_back(Polynomial::variable(ctx, ctx->vars()[v]) -
                            Polynomial::constant(ctx, p.coords[v]));
          Polynomial s(ctx);
          for (int terms = 0; terms < 3; ++terms) {
            Polynomial t = Polynomial::constant(ctx, rng.range(-4, 4));
            std::uint32_t left = target;
            for (std::uint32_t v = 0; v < 3 && left > 0; ++v) {
              std::uint32_t e =
                  (v == 2) ? left
                           : static_cast<std::uint32_t>(rng.below(left + 1));
              t = t * shift[v].pow(e);
              left -= e;
            }
            s = s + t;
          }
          if (s.is_zero()) continue;
          s = s + shift[1].pow(target + 1).scaled(
                      FieldScalar::from_int(0, rng.range(-2, 2)));
          DivisorRep d{s, ring};
          auto taylor = taylor_multiplicity(d, p);
          auto jets = multiplicity_via_jets(d, p, 8);
          if (jets.capped || *taylor != jets.value)
            return {false, "disagreement on s = " + s.to_string()};
          ++done;
        }
        return {true, "300 random instances agree exactly"};
      });

  add("proj.gluing", "omega_i = omega_j on P^2 chart overlaps",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto p2 = make_context({"x0", "x1", "x2"}, OrderKind::grevlex, 0);
        auto rep = verify_projective_gluing(P(p2, "x0^2*x2 - x1^3"));
        return {rep.glues && rep.pair_lines.size() == 3,
                "all three overlaps agree for f = x0^2 x2 - x1^3"};
      });

  add("proj.gluing_corrupted", "dropping the m del(x_n/x_i) term breaks "
                                  "gluing",
      [](std::uint64_t) -> std::pair<bool, std::string> {
        auto p2 = make_context({"x0", "x1", "x2"}, OrderKind::grevlex, 0);
        auto rep = verify_projective_gluing(P(p2, "x0^2*x2 - x1^3"), true);
        return {!rep.glues, "corruption detected: gluing fails as expected"};
      });

  return cases;
}

}  // namespace

CommandResult cmd_suite(std::uint64_t seed) {
  CommandResult r;
  auto cases = suite_cases();
  std::ostringstream out;
  out << "worked-example suite, seed " << seed << "\n";
  int failures = 0;
  std::size_t idx = 0;
  for (const auto& c : cases) {
    ++idx;
    std::pair<bool, std::string> res;
    try {
      res = c.run(seed);
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    if (!res.first) ++failures;
    std::ostringstream line;
    line << "[" << (idx < 10 ? " " : "") << idx << "/" << cases.size() << "] "
         << c.id << " (" << c.source << ") ... "
         << (res.first ? "PASS" : "FAIL");
    if (!res.second.empty()) line << "  -- " << res.second;
    out << line.str() << "\n";
    r.put("case_" + c.id, res.first ? "pass" : "fail");
  }
  out << (failures == 0 ? "all cases pass" : std::to_string(failures) +
                                                 " case(s) FAILED")
      << " (" << cases.size() << " cases)\n";
  r.text = out.str();
  r.put("seed", std::to_string(seed));
  r.put("cases", std::to_string(cases.size()));
  r.put("failures", std::to_string(failures));
  r.exit_code = failures == 0 ? 0 : 1;
  return r;
}

}  // namespace logjet
