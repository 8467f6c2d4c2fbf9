#ifndef LOGJET_SCALAR_HPP
#define LOGJET_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "util.hpp"

namespace logjet {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: lowest terms, positive denominator

std::string rat_to_string(const Rat& q);

// Element of the ground field: Q when characteristic is 0, GF(p) otherwise.
// All binary operations require matching characteristic.
class FieldScalar {
 public:
  FieldScalar() : char_(0), q_(0), r_(0) {}

  static FieldScalar rational(Rat q) {
    FieldScalar s;
    s.char_ = 0;
    s.q_ = canon(std::move(q));
    return s;
  }
  static FieldScalar modp(std::uint32_t p, std::int64_t v);
  static FieldScalar from_int(std::uint32_t characteristic, std::int64_t v);
  static FieldScalar from_rat(std::uint32_t characteristic, const Rat& q);
  static FieldScalar zero(std::uint32_t characteristic) {
    return from_int(characteristic, 0);
  }
  static FieldScalar one(std::uint32_t characteristic) {
    return from_int(characteristic, 1);
  }

  std::uint32_t characteristic() const { return char_; }
  bool is_zero() const { return char_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return char_ == 0 ? q_ == 1 : r_ == 1; }

  const Rat& rat() const;          // characteristic 0 only
  std::uint64_t residue() const;   // characteristic p only

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;  // throws DomainError on zero
  FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static Rat canon(Rat q) {
    q.canonicalize();
    return q;
  }
  void check_same(const FieldScalar& o) const {
    if (char_ != o.char_)
      throw DomainError("scalar characteristic mismatch: " +
                        std::to_string(char_) + " vs " +
                        std::to_string(o.char_));
  }

  std::uint32_t char_;
  Rat q_;            // used when char_ == 0
  std::uint64_t r_;  // used when char_ > 0, reduced to [0, p)
};

}  // namespace logjet

#endif
