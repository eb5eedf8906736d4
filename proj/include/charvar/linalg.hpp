#pragma once

#include <optional>
#include <vector>

#include "charvar/base.hpp"

namespace charvar {

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SNFResult {
  IntMat U, D, V;
  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SNFResult smith_normal_form(const IntMat& A);

// Fraction-free determinant (Bareiss).
Int det_int(const IntMat& A);

struct RankKernel {
  Index rank = 0;
  std::vector<RatVec> kernel;  // primitive integer vectors, first nonzero > 0
};

// Rank and right kernel of a rational matrix. Rows are scaled to integers
// and eliminated fraction-free; the kernel is recovered by exact back
// substitution.
RankKernel rank_and_kernel(const RatMat& A);

Index rat_rank(const RatMat& A);

// Some solution of A*x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

RatMat rat_inverse(const RatMat& A);  // throws on singular input

Rat det_rat(const RatMat& A);

// Kronecker product, row-major vec convention: vec(A*M*B) = kron(A, B^T) vec(M).
RatMat kron(const RatMat& A, const RatMat& B);

inline RatVec vec_rowmajor(const RatMat& M) {
  RatVec v(M.rows() * M.cols());
  Index k = 0;
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) v(k++) = M(i, j);
  return v;
}

// Incrementally maintained row space in reduced echelon form. insert()
// returns true when the vector enlarged the span.
class RowSpan {
 public:
  explicit RowSpan(Index width) : width_(width) {}

  bool insert(RatVec v);
  bool contains(RatVec v) const;
  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index width() const { return width_; }

 private:
  RatVec reduce(RatVec v) const;

  Index width_;
  std::vector<RatVec> rows_;    // pivot-normalized, sorted by pivot
  std::vector<Index> pivots_;
};

}  // namespace charvar
