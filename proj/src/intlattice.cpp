#include "intlattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace logjet {

namespace {

// Row Hermite form: returns (pivot column, row) pairs with strictly
// increasing pivot columns and positive pivots. Row operations are
// unimodular, so the row lattice is preserved.
std::vector<std::pair<std::size_t, IntVec>> hermite_rows(IntMat m,
                                                         std::size_t ncols) {
  std::vector<std::pair<std::size_t, IntVec>> result;
  for (std::size_t col = 0; col < ncols; ++col) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() || cmp(abs(m[i][col]), abs(m[best][col])) < 0)
          best = i;
      }
      if (best == m.size()) break;  // column already clear
      bool again = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == best || m[i][col] == 0) continue;
        Int q = m[i][col] / m[best][col];  // truncated quotient
        for (std::size_t c = 0; c < m[i].size(); ++c)
          m[i][c] -= q * m[best][c];
        if (m[i][col] != 0) again = true;
      }
      if (!again) {
        IntVec pivot = m[best];
        if (pivot[col] < 0)
          for (auto& v : pivot) v = -v;
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(best));
        result.push_back({col, std::move(pivot)});
        break;
      }
    }
  }
  return result;
}

// left kernel of A: integer vectors y with y*A = 0
IntMat kernel_left(const IntMat& a, std::size_t acols) {
  std::size_t n = a.size();
  IntMat aug;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec row(acols + n, Int(0));
    for (std::size_t c = 0; c < acols; ++c) row[c] = a[i][c];
    row[acols + i] = 1;
    aug.push_back(std::move(row));
  }
  auto h = hermite_rows(std::move(aug), acols + n);
  IntMat kernel;
  for (const auto& [col, row] : h) {
    if (col < acols) continue;  // row still touches the A-part
    IntVec y(row.begin() + static_cast<std::ptrdiff_t>(acols), row.end());
    kernel.push_back(std::move(y));
  }
  return kernel;
}

}  // namespace

SmithResult smith_normal_form(IntMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pi == rows || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // submatrix is zero
    std::swap(m[t], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Int q = m[i][t] / m[t][t];
      for (std::size_t c = 0; c < cols; ++c) m[i][c] -= q * m[t][c];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Int q = m[t][j] / m[t][t];
      for (std::size_t r = 0; r < rows; ++r) m[r][j] -= q * m[r][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; redo this index

    bool fixed = true;
    for (std::size_t i = t + 1; i < rows && fixed; ++i)
      for (std::size_t j = t + 1; j < cols && fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t c = 0; c < cols; ++c) m[t][c] += m[i][c];
          fixed = false;
        }
    if (!fixed) continue;

    if (m[t][t] < 0)
      for (std::size_t c = 0; c < cols; ++c) m[t][c] = -m[t][c];
    ++t;
  }

  SmithResult r;
  r.rank = t;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    r.diag.push_back(i < t ? m[i][i] : Int(0));
  return r;
}

bool in_row_lattice(const IntMat& m, const IntVec& x) {
  if (m.empty()) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  std::size_t ncols = m[0].size();
  if (x.size() != ncols) throw DomainError("lattice vector width mismatch");
  auto h = hermite_rows(m, ncols);
  IntVec w = x;
  for (const auto& [col, row] : h) {
    if (w[col] == 0) continue;
    if (w[col] % row[col] != 0) return false;
    Int q = w[col] / row[col];
    for (std::size_t c = 0; c < ncols; ++c) w[c] -= q * row[c];
  }
  for (const auto& v : w)
    if (v != 0) return false;
  return true;
}

IntMat lattice_intersect_support(const IntMat& m, std::size_t ncols,
                                 const std::vector<std::size_t>& support) {
  std::vector<bool> in_support(ncols, false);
  for (auto s : support) in_support.at(s) = true;

  auto h = hermite_rows(m, ncols);
  IntMat basis;
  for (auto& [col, row] : h) basis.push_back(row);
  if (basis.empty()) return {};

  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!in_support[c]) complement.push_back(c);

  IntMat restricted;
  for (const auto& b : basis) {
    IntVec r;
    for (auto c : complement) r.push_back(b[c]);
    restricted.push_back(std::move(r));
  }
  IntMat ys = kernel_left(restricted, complement.size());

  IntMat out;
  for (const auto& y : ys) {
    IntVec v(ncols, Int(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t c = 0; c < ncols; ++c) v[c] += y[i] * basis[i][c];
    bool nonzero = false;
    for (const auto& e : v)
      if (e != 0) nonzero = true;
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

bool lattice_has_nonneg_with(const IntMat& m, std::size_t ncols,
                             std::size_t strict_col) {
  std::size_t k = m.size();
  if (k == 0) return false;
  // constraints a.y + b >= 0 over rational y, then Fourier-Motzkin
  struct Constraint {
    std::vector<Rat> a;
    Rat b;
  };
  std::vector<Constraint> cs;
  for (std::size_t c = 0; c < ncols; ++c) {
    Constraint con;
    con.a.resize(k);
    for (std::size_t i = 0; i < k; ++i) con.a[i] = Rat(m[i][c]);
    con.b = 0;
    cs.push_back(std::move(con));
  }
  {
    Constraint strict;
    strict.a.resize(k);
    for (std::size_t i = 0; i < k; ++i) strict.a[i] = Rat(m[i][strict_col]);
    strict.b = -1;  // entry >= 1; any rational solution scales to the lattice
    cs.push_back(std::move(strict));
  }
  for (std::size_t v = 0; v < k; ++v) {
    std::vector<Constraint> pos, neg, zero;
    for (auto& c : cs) {
      int s = sgn(c.a[v]);
      if (s > 0)
        pos.push_back(std::move(c));
      else if (s < 0)
        neg.push_back(std::move(c));
      else
        zero.push_back(std::move(c));
    }
    std::vector<Constraint> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Constraint c;
        c.a.resize(k);
        Rat pa = p.a[v], na = n.a[v];
        for (std::size_t i = 0; i < k; ++i)
          c.a[i] = p.a[i] / pa - n.a[i] / na;
        c.b = p.b / pa - n.b / na;
        c.a[v] = 0;
        next.push_back(std::move(c));
      }
    cs = std::move(next);
  }
  for (const auto& c : cs)
    if (c.b < 0) return false;
  return true;
}

AbelianInvariants abelian_invariants(const IntMat& m, std::size_t ncols) {
  auto snf = smith_normal_form(m);
  AbelianInvariants inv;
  inv.free_rank = ncols - snf.rank;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.diag[i] > 1) inv.torsion.push_back(snf.diag[i]);
  return inv;
}

}  // namespace logjet
