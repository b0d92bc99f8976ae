#include "triality/intlinalg.hpp"

#include <cassert>
#include <utility>

namespace triality::intlinalg {

namespace {

// Integer row reduction to staircase form by unimodular operations.
// Keeps zero rows in place at the bottom; applies the same operations
// to *transform when given.
void reduce_rows(Mat& a, Mat* transform) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (transform) std::swap((*transform)[i], (*transform)[j]);
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& k) {
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += k * a[src][c];
    if (transform)
      for (std::size_t c = 0; c < (*transform)[dst].size(); ++c)
        (*transform)[dst][c] += k * (*transform)[src][c];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& v : a[i]) v = -v;
    if (transform)
      for (auto& v : (*transform)[i]) v = -v;
  };

  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on the entries of column c below row r until one survives.
    while (true) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] != 0 && (piv == rows ||
                             abs(a[i][c]) < abs(a[piv][c])))
          piv = i;
      }
      if (piv == rows) break;  // column is zero below r
      swap_rows(r, piv);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        add_multiple(i, r, -q);
        if (a[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) negate_row(r);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = a[i][c] / a[r][c];
      Int rem = a[i][c] - q * a[r][c];
      if (rem < 0) q -= 1;
      if (q != 0) add_multiple(i, r, -q);
    }
    ++r;
  }
}

}  // namespace

Mat hnf(Mat m) {
  reduce_rows(m, nullptr);
  Mat out;
  for (auto& row : m) {
    bool zero = true;
    for (auto& v : row)
      if (v != 0) zero = false;
    if (!zero) out.push_back(std::move(row));
  }
  return out;
}

bool lattice_contains(const Mat& hnf_basis, const Row& x) {
  Row r = lattice_reduce(hnf_basis, x);
  for (auto& v : r)
    if (v != 0) return false;
  return true;
}

Row lattice_reduce(const Mat& hnf_basis, Row x) {
  for (const auto& row : hnf_basis) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Int q = x[p] / row[p];
    Int rem = x[p] - q * row[p];
    if (rem < 0) q -= 1;
    if (q != 0)
      for (std::size_t c = 0; c < x.size(); ++c) x[c] -= q * row[c];
  }
  return x;
}

Mat kernel(const Mat& m, std::size_t cols) {
  Mat a = m;
  for (auto& row : a) row.resize(cols);  // tolerate ragged zero-padding
  Mat u = identity(a.size());
  reduce_rows(a, &u);
  Mat ker;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool zero = true;
    for (auto& v : a[i])
      if (v != 0) zero = false;
    if (zero) ker.push_back(u[i]);
  }
  return hnf(std::move(ker));
}

Mat preimage(const Mat& m, std::size_t cols, const Mat& l_hnf) {
  // x*m in L  <=>  (x, y)*[m ; L] = 0 for some y: take the kernel of
  // the stacked matrix and project onto the x-block.
  Mat stacked = m;
  for (const auto& row : l_hnf) stacked.push_back(row);
  for (auto& row : stacked) row.resize(cols);
  Mat ker = kernel(stacked, cols);
  Mat proj;
  for (const auto& row : ker) proj.emplace_back(row.begin(), row.begin() + m.size());
  return hnf(std::move(proj));
}

Int element_order(const Mat& hnf_basis, const Row& x) {
  // Solve y * B = x over Q; staircase shape makes this a forward pass.
  std::vector<Rat> rem(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) rem[c] = Rat(x[c]);
  Int k = 1;
  for (const auto& row : hnf_basis) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Rat y = rem[p] / Rat(row[p]);
    for (std::size_t c = 0; c < row.size(); ++c) rem[c] -= y * Rat(row[c]);
    k = lcm(k, den(y));
  }
  for (auto& v : rem)
    if (v != 0) return 0;  // outside the rational span: infinite order
  return k;
}

}  // namespace triality::intlinalg
