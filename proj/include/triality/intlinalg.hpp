// Exact integer lattice algebra: Hermite normal form, membership,
// kernels and preimages. Row convention: a lattice is the set of
// integer combinations of the rows of a matrix.
#pragma once

#include <vector>

#include "triality/rational.hpp"

namespace triality::intlinalg {

using Row = std::vector<Int>;
using Mat = std::vector<Row>;  // rows of equal width

inline Mat identity(std::size_t n) {
  Mat m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row-style Hermite normal form (lower staircase): returns a basis of
// the row lattice with positive pivots and reduced entries above them.
// Zero rows are dropped, so the result has full row rank.
Mat hnf(Mat m);

// Decides x in rowspan_Z(basis); basis must be an hnf() output.
bool lattice_contains(const Mat& hnf_basis, const Row& x);

// Reduces x modulo the lattice to a canonical representative: the
// unique coset member whose pivot-column coordinates lie in [0, pivot).
Row lattice_reduce(const Mat& hnf_basis, Row x);

// Integer kernel of m acting on row vectors (x with x*m == 0).
Mat kernel(const Mat& m, std::size_t cols);

// Lattice {x : x*m in rowspan_Z(l_basis)}; m maps Z^rows -> Z^cols.
Mat preimage(const Mat& m, std::size_t cols, const Mat& l_hnf);

// Smallest k > 0 with k*x in the lattice, or 0 if none exists.
Int element_order(const Mat& hnf_basis, const Row& x);

inline Row mat_apply(const Mat& m, const Row& x) {
  // x (len = m.size()) times m, producing a vector of m's width.
  std::size_t w = m.empty() ? 0 : m[0].size();
  Row out(w, 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < w; ++j) out[j] += x[i] * m[i][j];
  return out;
}

}  // namespace triality::intlinalg
