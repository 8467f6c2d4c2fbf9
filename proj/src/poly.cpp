#include "poly.hpp"

#include <algorithm>
#include <cctype>

namespace logjet {

Polynomial Polynomial::constant(ContextPtr ctx, const FieldScalar& c) {
  Polynomial p(std::move(ctx));
  if (c.characteristic() != p.ctx_->characteristic())
    throw DomainError("scalar characteristic does not match context");
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::constant(ContextPtr ctx, long v) {
  auto c = FieldScalar::from_int(ctx->characteristic(), v);
  return constant(std::move(ctx), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, const std::string& name) {
  auto idx = ctx->index_of(name);
  if (!idx) throw DomainError("unknown variable: " + name);
  Polynomial p(std::move(ctx));
  p.terms_.push_back(
      {Monomial::var(*idx), FieldScalar::one(p.ctx_->characteristic())});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(ctx);
  // combine duplicates, drop zeros, sort descending
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) {
                     return cmp_monomial(*ctx, a.first, b.first) > 0;
                   });
  for (auto& [m, c] : terms) {
    if (c.characteristic() != ctx->characteristic())
      throw DomainError("scalar characteristic does not match context");
    if (!p.terms_.empty() && p.terms_.back().first == m) {
      p.terms_.back().second = p.terms_.back().second + c;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!c.is_zero()) {
      p.terms_.push_back({std::move(m), std::move(c)});
    }
  }
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint64_t Polynomial::degree_in(std::uint32_t var) const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max<std::uint64_t>(d, m.exponent_of(var));
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front().first;
}

const FieldScalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front().second;
}

FieldScalar Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return FieldScalar::zero(ctx_->characteristic());
}

FieldScalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return FieldScalar::zero(ctx_->characteristic());
}

void Polynomial::check_ctx(const Polynomial& o) const {
  if (ctx_ == o.ctx_) return;
  if (ctx_ && o.ctx_ && ctx_->same_as(*o.ctx_)) return;
  throw DomainError("polynomial context mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ctx(o);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size())
      c = -1;
    else if (j == o.terms_.size())
      c = 1;
    else
      c = cmp_monomial(*ctx_, terms_[i].first, o.terms_[j].first);
    if (c > 0)
      r.terms_.push_back(terms_[i++]);
    else if (c < 0)
      r.terms_.push_back(o.terms_[j++]);
    else {
      FieldScalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
      ++i, ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) r.terms_.push_back({m, -c});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) r.terms_.push_back({m, k * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldScalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, k] : terms_) r.terms_.push_back({mm * m, k * c});
  return r;  // multiplying by a fixed monomial preserves the order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ctx(o);
  if (is_zero() || o.is_zero()) return Polynomial(ctx_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc.push_back({ma * mb, ca * cb});
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty() || ctx_->characteristic() != 0) return *this;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.rat().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.rat().get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coefficient().rat() < 0) scale = -scale;
  return scaled(FieldScalar::rational(scale));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_ctx(o);
  return terms_ == o.terms_;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  auto idx = ctx_->index_of(var);
  if (!idx) throw DomainError("unknown variable: " + var);
  return derivative(*idx);
}

Polynomial Polynomial::derivative(std::uint32_t var) const {
  std::vector<Term> acc;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.exponent_of(var);
    if (e == 0) continue;
    FieldScalar k = c * FieldScalar::from_int(ctx_->characteristic(),
                                              static_cast<std::int64_t>(e));
    if (k.is_zero()) continue;  // characteristic divides the exponent
    acc.push_back({m.divide(Monomial::var(var)), k});
  }
  return from_terms(ctx_, std::move(acc));
}

FieldScalar Polynomial::evaluate(const std::vector<FieldScalar>& point) const {
  if (point.size() != ctx_->nvars())
    throw DomainError("evaluation point arity mismatch");
  FieldScalar acc = FieldScalar::zero(ctx_->characteristic());
  for (const auto& [m, c] : terms_) {
    FieldScalar t = c;
    for (const auto& [v, e] : m.exps())
      for (std::uint32_t k = 0; k < e; ++k) t = t * point[v];
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::rename(const ContextPtr& target,
                              const std::vector<std::uint32_t>& var_map) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exps;
    for (const auto& [v, e] : m.exps()) {
      if (v >= var_map.size() || var_map[v] >= target->nvars())
        throw DomainError("rename: unmapped variable " + ctx_->name_of(v));
      exps.push_back({var_map[v], e});
    }
    acc.push_back({Monomial(std::move(exps)),
                   FieldScalar::from_rat(target->characteristic(),
                                         c.characteristic() == 0
                                             ? c.rat()
                                             : Rat(static_cast<long>(c.residue())))});
  }
  return from_terms(target, std::move(acc));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (m.is_one())
      s += cs;
    else if (cs == "1")
      s += monomial_to_string(*ctx_, m);
    else
      s += cs + "*" + monomial_to_string(*ctx_, m);
  }
  return s;
}

// ---------------------------------------------------------------------------
// parser: expr := term (('+'|'-') term)*
//         term := factor (('*')? factor)*        (juxtaposition multiplies)
//         factor := atom ('^' nat)?
//         atom := number | identifier | '(' expr ')' | '-' factor
//         number := nat ('/' nat)?

namespace {

class PolyParser {
 public:
  PolyParser(ContextPtr ctx, const std::string& text)
      : ctx_(std::move(ctx)), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::string num = read_digits();
      if (num.empty()) fail("expected exponent");
      unsigned long e = std::stoul(num);
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      d += s_[pos_++];
    return d;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den;
      std::size_t save = pos_;
      if (eat('/')) {
        skip_ws();
        den = read_digits();
        if (den.empty()) {
          pos_ = save;  // not a fraction after all
          den.clear();
        }
      }
      Rat q(num + (den.empty() ? "" : "/" + den));
      q.canonicalize();
      return Polynomial::constant(
          ctx_, FieldScalar::from_rat(ctx_->characteristic(), q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        name += s_[pos_++];
      if (!ctx_->index_of(name)) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ctx_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ContextPtr ctx_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
  return PolyParser(ctx, text).parse();
}

// ---------------------------------------------------------------------------
// truncated polynomials

TruncatedPoly::TruncatedPoly(ContextPtr ctx, std::uint32_t order)
    : ctx_(std::move(ctx)), coeffs_(order + 1, Polynomial(ctx_)) {}

TruncatedPoly TruncatedPoly::constant(ContextPtr ctx, std::uint32_t order,
                                      const Polynomial& c) {
  TruncatedPoly t(std::move(ctx), order);
  t.coeffs_[0] = c;
  return t;
}

bool TruncatedPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void TruncatedPoly::check(const TruncatedPoly& o) const {
  if (order() != o.order())
    throw DomainError("truncation order mismatch: " + std::to_string(order()) +
                      " vs " + std::to_string(o.order()));
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
  check(o);
  TruncatedPoly r(ctx_, order());
  for (std::uint32_t i = 0; i <= order(); ++i)
    r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const {
  check(o);
  TruncatedPoly r(ctx_, order());
  for (std::uint32_t i = 0; i <= order(); ++i)
    r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  check(o);
  TruncatedPoly r(ctx_, order());
  for (std::uint32_t i = 0; i <= order(); ++i)
    for (std::uint32_t j = 0; i + j <= order(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  return r;
}

TruncatedPoly TruncatedPoly::pow(std::uint32_t e) const {
  TruncatedPoly r =
      constant(ctx_, order(), Polynomial::constant(ctx_, 1));
  TruncatedPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

TruncatedPoly TruncatedPoly::truncated(std::uint32_t new_order) const {
  if (new_order > order()) throw DomainError("cannot raise truncation order");
  TruncatedPoly r(ctx_, new_order);
  for (std::uint32_t i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

bool TruncatedPoly::operator==(const TruncatedPoly& o) const {
  check(o);
  for (std::uint32_t i = 0; i <= order(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::string TruncatedPoly::to_string() const {
  std::string s;
  for (std::uint32_t i = 0; i <= order(); ++i) {
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

TruncatedPoly substitute(const Polynomial& f,
                         const std::map<std::string, TruncatedPoly>& images) {
  if (images.empty()) throw DomainError("substitute: no images given");
  const TruncatedPoly& first = images.begin()->second;
  ContextPtr target = first.context();
  std::uint32_t order = first.order();
  for (const auto& [name, img] : images) {
    if (img.order() != order)
      throw DomainError("substitute: image order mismatch for " + name);
    if (!(img.context() == target || img.context()->same_as(*target)))
      throw DomainError("substitute: image context mismatch for " + name);
  }
  const auto& src = *f.context();
  // resolve each source variable once
  std::vector<const TruncatedPoly*> by_var(src.nvars(), nullptr);
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.exps()) {
      if (by_var[v]) continue;
      auto it = images.find(src.name_of(v));
      if (it == images.end())
        throw DomainError("substitute: missing image for variable " +
                          src.name_of(v));
      by_var[v] = &it->second;
    }
  TruncatedPoly acc(target, order);
  for (const auto& [m, c] : f.terms()) {
    TruncatedPoly t = TruncatedPoly::constant(
        target, order,
        Polynomial::constant(target, FieldScalar::from_rat(
                                         target->characteristic(),
                                         c.characteristic() == 0
                                             ? c.rat()
                                             : Rat(static_cast<long>(c.residue())))));
    for (const auto& [v, e] : m.exps()) t = t * by_var[v]->pow(e);
    acc = acc + t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// univariate helpers

bool is_univariate(const Polynomial& f, std::uint32_t* var_out) {
  bool found = false;
  std::uint32_t var = 0;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.exps()) {
      if (!found) {
        found = true;
        var = v;
      } else if (v != var) {
        return false;
      }
    }
  if (var_out) *var_out = found ? var : 0;
  return true;
}

std::pair<Polynomial, Polynomial> poly_divmod_univariate(const Polynomial& f,
                                                         const Polynomial& g) {
  std::uint32_t vf = 0, vg = 0;
  if (!is_univariate(f, &vf) || !is_univariate(g, &vg))
    throw DomainError("divmod: inputs must be univariate");
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (!g.is_constant() && !f.is_constant() && vf != vg)
    throw DomainError("divmod: different variables");
  std::uint32_t var = g.is_constant() ? vf : vg;
  auto ctx = f.context();
  Polynomial q(ctx), r = f;
  std::uint64_t dg = g.degree_in(var);
  const FieldScalar lc = g.coefficient_of(Monomial::var(var, static_cast<std::uint32_t>(dg)));
  while (!r.is_zero() && r.degree_in(var) >= dg &&
         !(r.is_constant() && dg > 0)) {
    std::uint64_t dr = r.degree_in(var);
    FieldScalar c =
        r.coefficient_of(Monomial::var(var, static_cast<std::uint32_t>(dr))) /
        lc;
    Monomial shift = Monomial::var(var, static_cast<std::uint32_t>(dr - dg));
    Polynomial t = g.times_term(shift, c);
    q = q + Polynomial::from_terms(ctx, {{shift, c}});
    r = r - t;
  }
  return {q, r};
}

Polynomial poly_gcd_univariate(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod_univariate(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading_coefficient().inverse());  // monic normalization
}

Polynomial poly_divexact_univariate(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = poly_divmod_univariate(f, g);
  if (!r.is_zero()) throw DomainError("exact division has remainder");
  return q;
}

}  // namespace logjet
