#include "doctest.h"

#include "wordlab/modp.hpp"

using namespace wordlab;

namespace {

FpMatrix make(long long p, int rows, int cols,
              const std::vector<long long>& entries) {
  FpMatrix A = FpMatrix::zero(p, rows, cols);
  A.a = entries;
  return A;
}

}  // namespace

TEST_CASE("matrix-vector product mod p") {
  const FpMatrix A = make(7, 2, 3, {1, 2, 3, 4, 5, 6});
  const auto r = fp_matvec(A, {1, 1, 1});
  CHECK(r == std::vector<long long>{6, 1});  // 6 mod 7, 15 mod 7
}

TEST_CASE("rref identifies pivots and normalizes rows") {
  FpMatrix A = make(7, 3, 3, {2, 0, 0, 0, 0, 3, 0, 0, 5});
  const auto pivots = fp_rref(A);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(A.at(0, 0) == 1);
  CHECK(A.at(1, 2) == 1);
  for (int j = 0; j < 3; ++j) CHECK(A.at(2, j) == 0);
}

TEST_CASE("kernel of a rank-1 matrix") {
  // x + 2y + 3z = 0 over F7
  const FpMatrix A = make(7, 1, 3, {1, 2, 3});
  const auto K = fp_kernel(A);
  REQUIRE(K.size() == 2);
  for (const auto& v : K) {
    long long s = (v[0] + 2 * v[1] + 3 * v[2]) % 7;
    CHECK(s == 0);
  }
  // echelon basis: free columns carry the 1
  CHECK(K[0][1] == 1);
  CHECK(K[0][2] == 0);
  CHECK(K[1][1] == 0);
  CHECK(K[1][2] == 1);
}

TEST_CASE("kernel of an invertible matrix is trivial") {
  const FpMatrix A = make(13, 2, 2, {1, 2, 3, 4});  // det = -2 != 0 mod 13
  CHECK(fp_kernel(A).empty());
}

TEST_CASE("kernel vectors of a singular square matrix") {
  // rows are linearly dependent mod 5: second row = 2 * first
  const FpMatrix A = make(5, 2, 2, {1, 2, 2, 4});
  const auto K = fp_kernel(A);
  REQUIRE(K.size() == 1);
  CHECK((K[0][0] + 2 * K[0][1]) % 5 == 0);
}
