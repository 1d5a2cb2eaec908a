#pragma once

#include <cstddef>
#include <vector>

#include "aztec/numeric.hpp"

namespace aztec {

// Square skew-symmetric matrix over the rationals. Construction checks skew
// symmetry; set() keeps it by writing both (i,j) and (j,i).
class SkewMatrix {
 public:
  explicit SkewMatrix(std::size_t dim = 0);
  // Throws invalid-matrix if `rows` is not square and skew-symmetric.
  explicit SkewMatrix(std::vector<std::vector<Rational>> rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& value);

  // Matrix with rows/columns i and j deleted.
  SkewMatrix minor(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_;
  std::vector<Rational> data_;
};

// Skew-symmetric Gaussian elimination with pivot search, O(n^3).
Rational pfaffian(const SkewMatrix& m);

// Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A_{1j}) (1-based), memoized on the set
// of surviving indices.
Rational pfaffian_expand_first_row(const SkewMatrix& m);

// Exact determinant by fraction-valued Gaussian elimination.
Rational determinant(const SkewMatrix& m);

}  // namespace aztec
