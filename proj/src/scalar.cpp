#include "scalar.hpp"

namespace logjet {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

FieldScalar FieldScalar::modp(std::uint32_t p, std::int64_t v) {
  FieldScalar s;
  s.char_ = p;
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

FieldScalar FieldScalar::from_int(std::uint32_t characteristic, std::int64_t v) {
  if (characteristic == 0) return rational(Rat(static_cast<long>(v)));
  return modp(characteristic, v);
}

FieldScalar FieldScalar::from_rat(std::uint32_t characteristic, const Rat& q) {
  if (characteristic == 0) return rational(q);
  // a/b in GF(p): reduce both parts mod p, invert the denominator.
  Int p(static_cast<unsigned long>(characteristic));
  Int num = q.get_num() % p;
  Int den = q.get_den() % p;
  if (num < 0) num += p;
  FieldScalar n = modp(characteristic, num.get_si());
  FieldScalar d = modp(characteristic, den.get_si());
  return n * d.inverse();
}

const Rat& FieldScalar::rat() const {
  if (char_ != 0) throw DomainError("rat() on positive-characteristic scalar");
  return q_;
}

std::uint64_t FieldScalar::residue() const {
  if (char_ == 0) throw DomainError("residue() on characteristic-0 scalar");
  return r_;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.char_ = char_;
  if (char_ == 0)
    s.q_ = canon(q_ + o.q_);
  else
    s.r_ = (r_ + o.r_) % char_;
  return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.char_ = char_;
  if (char_ == 0)
    s.q_ = canon(q_ - o.q_);
  else
    s.r_ = (r_ + char_ - o.r_) % char_;
  return s;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.char_ = char_;
  if (char_ == 0)
    s.q_ = canon(q_ * o.q_);
  else
    s.r_ = (r_ * o.r_) % char_;  // p < 2^31, so the product fits in 64 bits
  return s;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s;
  s.char_ = char_;
  if (char_ == 0)
    s.q_ = canon(-q_);
  else
    s.r_ = r_ == 0 ? 0 : char_ - r_;
  return s;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero scalar");
  FieldScalar s;
  s.char_ = char_;
  if (char_ == 0) {
    s.q_ = canon(Rat(1) / q_);
    return s;
  }
  // extended Euclid on (r_, p)
  std::int64_t a = static_cast<std::int64_t>(r_), m = char_;
  std::int64_t x0 = 0, x1 = 1, b = m;
  while (a > 1) {
    std::int64_t q = a / b;
    std::int64_t t = b;
    b = a - q * b;
    a = t;
    t = x0;
    x0 = x1 - q * x0;
    x1 = t;
  }
  if (x1 < 0) x1 += m;
  s.r_ = static_cast<std::uint64_t>(x1);
  return s;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (char_ != o.char_) return false;
  return char_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldScalar::to_string() const {
  return char_ == 0 ? rat_to_string(q_) : std::to_string(r_);
}

}  // namespace logjet
