#ifndef LOGJET_UTIL_HPP
#define LOGJET_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logjet {

// Base class for everything the engine can throw.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (polynomials, presentation files).
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Structurally valid input outside the supported fragment
// (non-prime characteristic, singular point, unsupported ambient, ...).
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// Precondition violation on otherwise well-formed data
// (context mismatch, order mismatch, zero divisor in a localization, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Deterministic PRNG for the randomized suites. std::mt19937 plus the
// standard distributions is not bit-stable across library versions, and the
// suite output must be byte-identical for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace logjet

#endif
