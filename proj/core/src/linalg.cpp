#include "covertower/linalg.hpp"

#include <limits>
#include <utility>

#include "covertower/error.hpp"

namespace covertower {

namespace {

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct SmithState {
  BigMatrix a;
  BigMatrix q;
  BigMatrix qinv;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : q) std::swap(row[i], row[j]);
    std::swap(qinv[i], qinv[j]);
  }

  // row_i -= k row_t
  void row_sub(std::size_t i, std::size_t t, const BigInt& k) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= k * a[t][c];
  }

  // col_j -= k col_t
  void col_sub(std::size_t j, std::size_t t, const BigInt& k) {
    for (std::size_t r = 0; r < rows; ++r) a[r][j] -= k * a[r][t];
    for (auto& row : q) row[j] -= k * row[t];
    for (std::size_t c = 0; c < cols; ++c) qinv[t][c] += k * qinv[j][c];
  }
};

}  // namespace

SmithForm smith_form(const IntMatrix& input, std::size_t columns) {
  SmithState st{BigMatrix(input.size(), std::vector<BigInt>(columns, 0)),
                identity(columns), identity(columns), input.size(), columns};
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].size() != columns) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    }
    for (std::size_t j = 0; j < columns; ++j) st.a[i][j] = input[i][j];
  }

  SmithForm out;
  const std::size_t limit = std::min(st.rows, st.cols);
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = 0, pj = 0;
    BigInt best = 0;
    for (std::size_t i = t; i < st.rows; ++i) {
      for (std::size_t j = t; j < st.cols; ++j) {
        if (st.a[i][j] != 0 && (best == 0 || abs(st.a[i][j]) < best)) {
          best = abs(st.a[i][j]);
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < st.rows; ++i) {
        if (st.a[i][t] != 0) {
          st.row_sub(i, t, st.a[i][t] / st.a[t][t]);
          if (st.a[i][t] != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < st.cols; ++j) {
        if (st.a[t][j] != 0) {
          st.col_sub(j, t, st.a[t][j] / st.a[t][t]);
          if (st.a[t][j] != 0) clean = false;
        }
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < st.rows; ++i) {
          if (st.a[i][t] != 0 && abs(st.a[i][t]) < abs(st.a[bi][bj])) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < st.cols; ++j) {
          if (st.a[t][j] != 0 && abs(st.a[t][j]) < abs(st.a[bi][bj])) {
            bi = t;
            bj = j;
          }
        }
        st.swap_rows(t, bi);
        st.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < st.rows && divides; ++i) {
        for (std::size_t j = t + 1; j < st.cols; ++j) {
          if (st.a[i][j] % st.a[t][t] != 0) {
            for (std::size_t c = 0; c < st.cols; ++c) st.a[t][c] += st.a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.diagonal.push_back(abs(st.a[t][t]));
  }
  out.column_transform = std::move(st.q);
  out.column_inverse = std::move(st.qinv);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a,
                              std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < columns; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  auto a = m;
  return rref(a, a[0].size()).size();
}

std::vector<std::vector<Rational>> null_space(
    const std::vector<std::vector<Rational>>& m, std::size_t columns) {
  auto a = m;
  const auto pivots = rref(a, columns);
  std::vector<char> is_pivot(columns, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::DimensionMismatch, "integer overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace covertower
