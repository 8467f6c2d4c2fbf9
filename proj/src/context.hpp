#ifndef LOGJET_CONTEXT_HPP
#define LOGJET_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "util.hpp"

namespace logjet {

enum class OrderKind { lex, grevlex };

// Fixed list of variable names plus monomial order and characteristic.
// Immutable after construction; polynomials hold a shared_ptr to theirs.
//
// block_of assigns each variable to an order block: blocks are compared
// left to right, grevlex inside each block. An empty block_of means a
// single block, i.e. the plain declared order. Block orders are only
// produced internally, for elimination.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> vars, OrderKind order,
                  std::uint32_t characteristic,
                  std::vector<std::uint32_t> block_of = {});

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  OrderKind order() const { return order_; }
  std::uint32_t characteristic() const { return char_; }
  const std::vector<std::uint32_t>& blocks() const { return block_of_; }

  std::optional<std::uint32_t> index_of(const std::string& name) const;
  const std::string& name_of(std::uint32_t idx) const { return vars_.at(idx); }

  bool same_as(const VariableContext& o) const;

 private:
  std::vector<std::string> vars_;
  OrderKind order_;
  std::uint32_t char_;
  std::vector<std::uint32_t> block_of_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> vars, OrderKind order,
                        std::uint32_t characteristic,
                        std::vector<std::uint32_t> block_of = {});

// Power product as a sparse exponent list, sorted by variable index,
// zero exponents never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> exps);

  static Monomial var(std::uint32_t idx, std::uint32_t exp = 1);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& exps() const {
    return e_;
  }
  bool is_one() const { return e_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent_of(std::uint32_t idx) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // *this / o, o must divide
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e_;
};

// Strict order: negative if a < b, zero if equal, positive if a > b,
// with respect to ctx's monomial order.
int cmp_monomial(const VariableContext& ctx, const Monomial& a,
                 const Monomial& b);

std::string monomial_to_string(const VariableContext& ctx, const Monomial& m);

}  // namespace logjet

#endif
