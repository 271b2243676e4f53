#include "wordlab/modp.hpp"

#include <algorithm>

#include "wordlab/numtheory.hpp"

namespace wordlab {

std::vector<long long> fp_matvec(const FpMatrix& A, const std::vector<long long>& v) {
  std::vector<long long> out(A.rows, 0);
  for (int i = 0; i < A.rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < A.cols; ++j) acc = (acc + A.at(i, j) * v[j]) % A.p;
    out[i] = acc;
  }
  return out;
}

std::vector<int> fp_rref(FpMatrix& A) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols && row < A.rows; ++col) {
    int pr = -1;
    for (int i = row; i < A.rows; ++i)
      if (A.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(row, j));
    const long long inv = mod_inv(A.at(row, col), A.p);
    for (int j = 0; j < A.cols; ++j) A.at(row, j) = A.at(row, j) * inv % A.p;
    for (int i = 0; i < A.rows; ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      const long long f = A.at(i, col);
      for (int j = 0; j < A.cols; ++j)
        A.at(i, j) = (A.at(i, j) - f * A.at(row, j) % A.p + A.p) % A.p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<long long>> fp_kernel(FpMatrix A) {
  const std::vector<int> pivots = fp_rref(A);
  std::vector<int> pivot_of_col(A.cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);

  std::vector<std::vector<long long>> basis;
  for (int free = 0; free < A.cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<long long> v(A.cols, 0);
    v[free] = 1;
    for (int col = 0; col < A.cols; ++col) {
      const int r = pivot_of_col[col];
      if (r >= 0) v[col] = (A.p - A.at(r, free)) % A.p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wordlab
