#include "artin/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace artin {

namespace {

// Bareiss elimination with caller-chosen column order. Returns pivot columns.
std::vector<std::size_t> bareiss(IntMatrix& m, const std::vector<std::size_t>& order, std::size_t rhs_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size();
  std::size_t total = m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == rows) break;
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const BigInt piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = m[i][c];
      for (std::size_t j = 0; j < total; ++j) {
        BigInt v = piv * m[i][j] - f * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  (void)rhs_cols;
  return pivots;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace

std::size_t bareiss_rank(IntMatrix a) {
  if (a.empty()) return 0;
  return bareiss(a, identity_order(a[0].size()), 0).size();
}

std::vector<std::size_t> independent_columns(const IntMatrix& a, const std::vector<std::size_t>& order) {
  IntMatrix m = a;
  if (m.empty()) return {};
  return bareiss(m, order, 0);
}

std::optional<RationalSolution> solve_preferring(const IntMatrix& a, const std::vector<BigInt>& b,
                                                 const std::vector<std::size_t>& order) {
  std::size_t rows = b.size();
  std::size_t n = order.size();
  IntMatrix m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a.empty() ? std::vector<BigInt>() : a[i];
    m[i].resize(n);
    m[i].push_back(b[i]);
  }
  RationalSolution sol;
  sol.x.assign(n, 0);
  if (rows == 0) return sol;
  auto piv = bareiss(m, order, 1);
  std::size_t r = piv.size();
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][n] != 0) return std::nullopt;
  // Back substitution on the triangular pivot block.
  for (std::size_t k = r; k-- > 0;) {
    BigRational acc(m[k][n]);
    for (std::size_t l = k + 1; l < r; ++l) acc -= BigRational(m[k][piv[l]]) * sol.x[piv[l]];
    acc /= BigRational(m[k][piv[k]]);
    acc.canonicalize();
    sol.x[piv[k]] = acc;
  }
  sol.pivots = piv;
  return sol;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv(n, std::vector<BigRational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    BigRational f = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= f;
      inv[c][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      BigRational g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

void RowLattice::add(std::vector<BigInt> v) {
  v.resize(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    int pr = pivot_row_[c];
    if (pr < 0) {
      if (v[c] < 0)
        for (auto& e : v) e = -e;
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(v));
      return;
    }
    auto& b = rows_[static_cast<std::size_t>(pr)];
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(), v[c].get_mpz_t());
    BigInt bc = b[c] / g, vc = v[c] / g;
    std::vector<BigInt> nb(cols_), nv(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      nb[j] = s * b[j] + t * v[j];
      nv[j] = bc * v[j] - vc * b[j];
    }
    b = std::move(nb);
    v = std::move(nv);
  }
}

IntMatrix RowLattice::rows() const { return rows_; }

SmithColumns smith_columns(const IntMatrix& input, std::size_t cols) {
  // Reduce to a square-ish basis first; row operations never touch Q.
  RowLattice lat(cols);
  for (const auto& r : input) lat.add(r);
  IntMatrix a = lat.rows();
  std::size_t rows = a.size();
  IntMatrix q(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) q[i][i] = 1;

  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& r : a) std::swap(r[x], r[y]);
    for (auto& r : q) std::swap(r[x], r[y]);
  };
  // col_y -= f * col_x
  auto col_addmul = [&](std::size_t y, std::size_t x, const BigInt& f) {
    for (auto& r : a) r[y] -= f * r[x];
    for (auto& r : q) r[y] -= f * r[x];
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pick the smallest nonzero entry in the remaining block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[pi], a[t]);
    col_swap(pj, t);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[i], a[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_addmul(j, t, f);
        if (a[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility condition on the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    if (a[t][t] < 0) {
      for (auto& r : a) r[t] = -r[t];
      for (auto& r : q) r[t] = -r[t];
    }
    ++t;
  }
  SmithColumns out;
  out.diag.assign(cols, 0);
  for (std::size_t i = 0; i < t; ++i) out.diag[i] = a[i][i];
  out.q = std::move(q);
  return out;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<BigInt>& b) {
  std::size_t m = b.size();
  std::size_t n = a.empty() ? 0 : a[0].size();
  // Work on columns of A as rows of T = A^T, tracking U with U * A^T = echelon.
  IntMatrix t(n, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  IntMatrix u(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    for (std::size_t i = r + 1; i < n; ++i) {
      if (t[i][c] == 0) continue;
      if (t[r][c] == 0) {
        std::swap(t[r], t[i]);
        std::swap(u[r], u[i]);
        continue;
      }
      BigInt g, s, w;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), w.get_mpz_t(), t[r][c].get_mpz_t(), t[i][c].get_mpz_t());
      BigInt rc = t[r][c] / g, ic = t[i][c] / g;
      for (auto* mat : {&t, &u}) {
        auto& R = (*mat)[r];
        auto& I = (*mat)[i];
        for (std::size_t j = 0; j < R.size(); ++j) {
          BigInt nr = s * R[j] + w * I[j];
          BigInt ni = rc * I[j] - ic * R[j];
          R[j] = std::move(nr);
          I[j] = std::move(ni);
        }
      }
    }
    if (t[r][c] != 0) {
      pivot_cols.push_back(c);
      ++r;
    }
  }
  // Echelon rows: t[k] = sum_j u[k][j] * (column j of A). Solve for y.
  std::vector<BigInt> y(r);
  std::vector<BigInt> resid = b;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t c = pivot_cols[k];
    if (resid[c] % t[k][c] != 0) return std::nullopt;
    y[k] = resid[c] / t[k][c];
    for (std::size_t i = 0; i < m; ++i) resid[i] -= y[k] * t[k][i];
  }
  for (const auto& v : resid)
    if (v != 0) return std::nullopt;
  IntegerSolution sol;
  sol.x.assign(n, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) sol.x[j] += y[k] * u[k][j];
  for (std::size_t k = r; k < n; ++k) sol.kernel.push_back(u[k]);
  return sol;
}

}  // namespace artin
