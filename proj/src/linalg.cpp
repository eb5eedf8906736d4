#include "charvar/linalg.hpp"

#include <numeric>

namespace charvar {

std::vector<Int> SNFResult::invariant_factors() const {
  std::vector<Int> fs;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) fs.push_back(D(i, i));
  return fs;
}

namespace {

// Truncated quotient; the remainder satisfies |r| < |b|.
Int quot(const Int& a, const Int& b) { return a / b; }

struct SnfWork {
  IntMat D, U, V;

  void swap_rows(Index a, Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    U.row(a).swap(U.row(b));
  }
  void swap_cols(Index a, Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    V.col(a).swap(V.col(b));
  }
  void add_row(Index dst, Index src, const Int& c) {  // row dst += c * row src
    D.row(dst) += c * D.row(src);
    U.row(dst) += c * U.row(src);
  }
  void add_col(Index dst, Index src, const Int& c) {
    D.col(dst) += c * D.col(src);
    V.col(dst) += c * V.col(src);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& A) {
  const Index m = A.rows(), n = A.cols();
  SnfWork w{A, int_identity(m), int_identity(n)};

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    // Smallest nonzero pivot in the remaining submatrix limits entry growth.
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j) {
        if (w.D(i, j) == 0) continue;
        if (pi < 0 || abs(w.D(i, j)) < abs(w.D(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = 0; i < m; ++i) {
        if (i == t || w.D(i, t) == 0) continue;
        Int q = quot(w.D(i, t), w.D(t, t));
        if (q != 0) w.add_row(i, t, -q);
        if (w.D(i, t) != 0) {  // remainder became the smaller pivot
          w.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (Index j = 0; j < n; ++j) {
        if (j == t || w.D(t, j) == 0) continue;
        Int q = quot(w.D(t, j), w.D(t, t));
        if (q != 0) w.add_col(j, t, -q);
        if (w.D(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Row and column t are clear; force the pivot to divide the rest.
      bool divides = true;
      for (Index i = t + 1; i < m && divides; ++i)
        for (Index j = t + 1; j < n && divides; ++j)
          if (w.D(i, j) % w.D(t, t) != 0) {
            w.add_col(t, j, 1);
            divides = false;
          }
      if (divides) break;
    }
  }

  for (Index t = 0; t < steps; ++t)
    if (w.D(t, t) < 0) {
      w.D.row(t) = -w.D.row(t);
      w.U.row(t) = -w.U.row(t);
    }

  return SNFResult{std::move(w.U), std::move(w.D), std::move(w.V)};
}

Int det_int(const IntMat& A) {
  if (A.rows() != A.cols()) throw Error("determinant of non-square matrix");
  const Index n = A.rows();
  if (n == 0) return 1;
  IntMat M = A;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    Index pi = -1, pj = -1;
    for (Index i = k; i < n; ++i)
      for (Index j = k; j < n; ++j)
        if (M(i, j) != 0 && (pi < 0 || abs(M(i, j)) < abs(M(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) return 0;
    if (pi != k) {
      M.row(pi).swap(M.row(k));
      sign = -sign;
    }
    if (pj != k) {
      M.col(pj).swap(M.col(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)) / prev;
      M(i, k) = 0;
    }
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

namespace {

// Bareiss echelon with full pivoting over a row-integerized copy of A.
// Column swaps are recorded in colperm; returns the rank.
struct Echelon {
  IntMat M;
  std::vector<Index> colperm;
  Index rank = 0;
};

Echelon bareiss_echelon(const RatMat& A) {
  const Index m = A.rows(), n = A.cols();
  Echelon e;
  e.M.resize(m, n);
  for (Index i = 0; i < m; ++i) {
    Int l = 1;
    for (Index j = 0; j < n; ++j) l = lcm(l, denominator(A(i, j)));
    for (Index j = 0; j < n; ++j)
      e.M(i, j) = numerator(A(i, j)) * (l / denominator(A(i, j)));
  }
  e.colperm.resize(n);
  for (Index j = 0; j < n; ++j) e.colperm[j] = j;

  Int prev = 1;
  Index r = 0;
  for (Index c = 0; r < m && c < n; ++c) {
    Index pi = -1, pj = -1;
    for (Index i = r; i < m; ++i)
      for (Index j = r; j < n; ++j)
        if (e.M(i, j) != 0 && (pi < 0 || abs(e.M(i, j)) < abs(e.M(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    e.M.row(pi).swap(e.M.row(r));
    if (pj != r) {
      e.M.col(pj).swap(e.M.col(r));
      std::swap(e.colperm[pj], e.colperm[r]);
    }
    for (Index i = r + 1; i < m; ++i) {
      for (Index j = r + 1; j < n; ++j)
        e.M(i, j) = (e.M(r, r) * e.M(i, j) - e.M(i, r) * e.M(r, j)) / prev;
      e.M(i, r) = 0;
    }
    prev = e.M(r, r);
    ++r;
  }
  e.rank = r;
  return e;
}

RatVec normalize_primitive(RatVec v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v(i)));
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, Int(numerator(v(i)) * (l / denominator(v(i)))));
  if (g == 0) return v;
  int sign = 1;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      sign = v(i) > 0 ? 1 : -1;
      break;
    }
  Rat scale = Rat(Int(sign) * l, g);
  for (Index i = 0; i < v.size(); ++i) v(i) *= scale;
  return v;
}

}  // namespace

RankKernel rank_and_kernel(const RatMat& A) {
  const Index n = A.cols();
  Echelon e = bareiss_echelon(A);
  RankKernel out;
  out.rank = e.rank;
  const Index r = e.rank;

  for (Index f = r; f < n; ++f) {
    // Solve the triangular pivot block against minus the free column.
    RatVec x = RatVec::Zero(r);
    for (Index i = r - 1; i >= 0; --i) {
      Rat s = Rat(-e.M(i, f));
      for (Index k = i + 1; k < r; ++k) s -= Rat(e.M(i, k)) * x(k);
      x(i) = s / Rat(e.M(i, i));
    }
    RatVec v = RatVec::Zero(n);
    for (Index i = 0; i < r; ++i) v(e.colperm[i]) = x(i);
    v(e.colperm[f]) = 1;
    out.kernel.push_back(normalize_primitive(std::move(v)));
  }
  return out;
}

Index rat_rank(const RatMat& A) { return bareiss_echelon(A).rank; }

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
  if (b.size() != A.rows()) throw Error("solve: dimension mismatch");
  const Index m = A.rows(), n = A.cols();
  RatMat M(m, n + 1);
  M.leftCols(n) = A;
  M.col(n) = b;

  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index pi = -1;
    for (Index i = r; i < m; ++i)
      if (M(i, c) != 0) {
        pi = i;
        break;
      }
    if (pi < 0) continue;
    M.row(pi).swap(M.row(r));
    Rat inv = Rat(1) / M(r, c);
    for (Index j = c; j <= n; ++j) M(r, j) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (Index j = c; j <= n; ++j) M(i, j) -= f * M(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i)
    if (M(i, n) != 0) return std::nullopt;

  RatVec x = RatVec::Zero(n);
  for (Index k = 0; k < r; ++k) x(pivot_col[k]) = M(k, n);
  return x;
}

RatMat rat_inverse(const RatMat& A) {
  if (A.rows() != A.cols()) throw Error("inverse of non-square matrix");
  const Index n = A.rows();
  RatMat M(n, 2 * n);
  M.leftCols(n) = A;
  M.rightCols(n) = rat_identity(n);
  for (Index c = 0; c < n; ++c) {
    Index pi = -1;
    for (Index i = c; i < n; ++i)
      if (M(i, c) != 0) {
        pi = i;
        break;
      }
    if (pi < 0) throw Error("singular matrix");
    M.row(pi).swap(M.row(c));
    Rat inv = Rat(1) / M(c, c);
    for (Index j = c; j < 2 * n; ++j) M(c, j) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (Index j = c; j < 2 * n; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return M.rightCols(n);
}

Rat det_rat(const RatMat& A) {
  if (A.rows() != A.cols()) throw Error("determinant of non-square matrix");
  Int den = 1;
  RatMat M = A;
  for (Index i = 0; i < M.rows(); ++i) {
    Int l = 1;
    for (Index j = 0; j < M.cols(); ++j) l = lcm(l, denominator(M(i, j)));
    den *= l;
    for (Index j = 0; j < M.cols(); ++j) M(i, j) *= Rat(l);
  }
  IntMat B(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) B(i, j) = numerator(M(i, j));
  return Rat(det_int(B), den);
}

RatMat kron(const RatMat& A, const RatMat& B) {
  RatMat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      for (Index p = 0; p < B.rows(); ++p)
        for (Index q = 0; q < B.cols(); ++q)
          K(i * B.rows() + p, j * B.cols() + q) = A(i, j) * B(p, q);
  return K;
}

RatVec RowSpan::reduce(RatVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Index p = pivots_[k];
    if (v(p) != 0) v -= v(p) * rows_[k];
  }
  return v;
}

bool RowSpan::insert(RatVec v) {
  if (v.size() != width_) throw Error("RowSpan: width mismatch");
  v = reduce(std::move(v));
  Index p = -1;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      p = i;
      break;
    }
  if (p < 0) return false;
  RatVec row = v / v(p);
  // Back-substitute into existing rows to keep the echelon reduced.
  for (size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k](p) != 0) rows_[k] -= rows_[k](p) * row;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowSpan::contains(RatVec v) const {
  v = reduce(std::move(v));
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace charvar
