#pragma once

#include <vector>

namespace wordlab {

/// Dense row-major matrix over the field with p elements (p an odd prime
/// small enough that p^2 fits in long long). Entries are kept in [0, p).
struct FpMatrix {
  long long p = 0;
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  static FpMatrix zero(long long p, int rows, int cols) {
    return {p, rows, cols,
            std::vector<long long>(static_cast<std::size_t>(rows) * cols, 0)};
  }

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

std::vector<long long> fp_matvec(const FpMatrix& A, const std::vector<long long>& v);

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> fp_rref(FpMatrix& A);

/// Basis of {v : Av = 0}, one vector per free column, in ascending free-column
/// order with the free coordinate set to 1 (a deterministic echelon basis).
std::vector<std::vector<long long>> fp_kernel(FpMatrix A);

}  // namespace wordlab
