#include "context.hpp"

#include <algorithm>
#include <set>

namespace logjet {

VariableContext::VariableContext(std::vector<std::string> vars, OrderKind order,
                                 std::uint32_t characteristic,
                                 std::vector<std::uint32_t> block_of)
    : vars_(std::move(vars)), order_(order), char_(characteristic),
      block_of_(std::move(block_of)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second)
      throw DomainError("duplicate variable name: " + v);
  }
  if (char_ != 0 && !is_prime_u32(char_))
    throw UnsupportedError("characteristic must be 0 or prime, got " +
                           std::to_string(char_));
  if (!block_of_.empty() && block_of_.size() != vars_.size())
    throw DomainError("block assignment length mismatch");
}

std::optional<std::uint32_t> VariableContext::index_of(
    const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

bool VariableContext::same_as(const VariableContext& o) const {
  return vars_ == o.vars_ && order_ == o.order_ && char_ == o.char_ &&
         block_of_ == o.block_of_;
}

ContextPtr make_context(std::vector<std::string> vars, OrderKind order,
                        std::uint32_t characteristic,
                        std::vector<std::uint32_t> block_of) {
  return std::make_shared<VariableContext>(std::move(vars), order,
                                           characteristic, std::move(block_of));
}

Monomial::Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> exps)
    : e_(std::move(exps)) {
  std::sort(e_.begin(), e_.end());
  std::size_t w = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i].second == 0) continue;
    if (w > 0 && e_[w - 1].first == e_[i].first)
      throw DomainError("duplicate variable in monomial");
    e_[w++] = e_[i];
  }
  e_.resize(w);
}

Monomial Monomial::var(std::uint32_t idx, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.e_.push_back({idx, exp});
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(std::uint32_t idx) const {
  for (const auto& [v, e] : e_)
    if (v == idx) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.e_.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.e_.push_back(o.e_[j++]);
    else {
      r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : e_) {
    std::uint32_t sub = 0;
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j].second;
    if (sub > e) throw DomainError("monomial division not exact");
    if (e > sub) r.e_.push_back({v, e - sub});
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
      r.e_.push_back(e_[i++]);
    else if (i == e_.size() || o.e_[j].first < e_[i].first)
      r.e_.push_back(o.e_[j++]);
    else {
      r.e_.push_back({e_[i].first, std::max(e_[i].second, o.e_[j].second)});
      ++i, ++j;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  std::size_t i = 0, j = 0;
  while (i < e_.size() && j < o.e_.size()) {
    if (e_[i].first < o.e_[j].first)
      ++i;
    else if (o.e_[j].first < e_[i].first)
      ++j;
    else
      return false;
  }
  return true;
}

namespace {

// grevlex on the exponents restricted to one block: higher block degree
// wins; on ties the monomial with the smaller exponent at the last
// differing variable is the larger one.
int cmp_grevlex_block(const Monomial& a, const Monomial& b,
                      const std::vector<std::uint32_t>& block_of,
                      std::uint32_t block) {
  auto in_block = [&](std::uint32_t v) {
    return block_of.empty() || block_of[v] == block;
  };
  std::uint64_t da = 0, db = 0;
  for (const auto& [v, e] : a.exps())
    if (in_block(v)) da += e;
  for (const auto& [v, e] : b.exps())
    if (in_block(v)) db += e;
  if (da != db) return da < db ? -1 : 1;
  // scan from the highest variable index down
  const auto& ae = a.exps();
  const auto& be = b.exps();
  std::size_t i = ae.size(), j = be.size();
  while (i > 0 || j > 0) {
    while (i > 0 && !in_block(ae[i - 1].first)) --i;
    while (j > 0 && !in_block(be[j - 1].first)) --j;
    if (i == 0 && j == 0) break;
    std::uint32_t va = i > 0 ? ae[i - 1].first : 0;
    std::uint32_t vb = j > 0 ? be[j - 1].first : 0;
    // rightmost nonzero entry of a-b decides: negative there means a larger
    if (i == 0 || (j > 0 && vb > va)) return 1;
    if (j == 0 || va > vb) return -1;
    // same variable
    std::uint32_t ea = ae[i - 1].second, eb = be[j - 1].second;
    if (ea != eb) return ea < eb ? 1 : -1;
    --i, --j;
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
  const auto& ae = a.exps();
  const auto& be = b.exps();
  std::size_t i = 0, j = 0;
  while (i < ae.size() || j < be.size()) {
    if (j == be.size() || (i < ae.size() && ae[i].first < be[j].first))
      return 1;  // a has a positive exponent at an earlier variable
    if (i == ae.size() || be[j].first < ae[i].first) return -1;
    if (ae[i].second != be[j].second)
      return ae[i].second < be[j].second ? -1 : 1;
    ++i, ++j;
  }
  return 0;
}

}  // namespace

int cmp_monomial(const VariableContext& ctx, const Monomial& a,
                 const Monomial& b) {
  if (!ctx.blocks().empty()) {
    std::uint32_t nblocks = 0;
    for (auto bidx : ctx.blocks()) nblocks = std::max(nblocks, bidx + 1);
    for (std::uint32_t blk = 0; blk < nblocks; ++blk) {
      int c = cmp_grevlex_block(a, b, ctx.blocks(), blk);
      if (c != 0) return c;
    }
    return 0;
  }
  if (ctx.order() == OrderKind::lex) return cmp_lex(a, b);
  return cmp_grevlex_block(a, b, {}, 0);
}

std::string monomial_to_string(const VariableContext& ctx, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.exps()) {
    if (!s.empty()) s += "*";
    s += ctx.name_of(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace logjet
