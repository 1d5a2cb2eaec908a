#include "aztec/exactalg.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "aztec/errors.hpp"

namespace aztec {

SkewMatrix::SkewMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Rational(0)) {}

SkewMatrix::SkewMatrix(std::vector<std::vector<Rational>> rows)
    : dim_(rows.size()), data_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (rows[i].size() != dim_) {
      throw Error(ErrorCode::kInvalidMatrix, "matrix is not square");
    }
    for (std::size_t j = 0; j < dim_; ++j) data_[i * dim_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) +
                        ") break skew symmetry");
      }
    }
  }
}

void SkewMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i == j) {
    if (value != 0) throw Error(ErrorCode::kInvalidMatrix, "diagonal must be zero");
    return;
  }
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = -value;
}

SkewMatrix SkewMatrix::minor(std::size_t i, std::size_t j) const {
  SkewMatrix out(dim_ - 2);
  std::size_t r = 0;
  for (std::size_t x = 0; x < dim_; ++x) {
    if (x == i || x == j) continue;
    std::size_t c = 0;
    for (std::size_t y = 0; y < dim_; ++y) {
      if (y == i || y == j) continue;
      out.data_[r * out.dim_ + c] = (*this)(x, y);
      ++c;
    }
    ++r;
  }
  return out;
}

namespace {

void require_even(const SkewMatrix& m) {
  if (m.dim() % 2 != 0) {
    throw Error(ErrorCode::kInvalidMatrix,
                "Pfaffian needs even dimension, got " + std::to_string(m.dim()));
  }
}

}  // namespace

Rational pfaffian(const SkewMatrix& m) {
  require_even(m);
  const std::size_t n = m.dim();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  Rational pf = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // Bring a nonzero entry of row k into column k+1.
    std::size_t pivot = k + 1;
    while (pivot < n && at(k, pivot) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k + 1) {
      for (std::size_t x = 0; x < n; ++x) std::swap(at(k + 1, x), at(pivot, x));
      for (std::size_t x = 0; x < n; ++x) std::swap(at(x, k + 1), at(x, pivot));
      pf = -pf;
    }
    const Rational head = at(k, k + 1);
    pf *= head;
    // Clear row/column k beyond k+1 using row/column k+1; the trailing block
    // picks up the rank-two update tau (x) a_{.,k+1} - a_{.,k+1} (x) tau.
    std::vector<Rational> tau(n);
    for (std::size_t i = k + 2; i < n; ++i) tau[i] = at(k, i) / head;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        if (i == j) continue;
        at(i, j) += tau[i] * at(j, k + 1) - at(i, k + 1) * tau[j];
      }
    }
  }
  return pf;
}

Rational pfaffian_expand_first_row(const SkewMatrix& m) {
  require_even(m);
  const std::size_t n = m.dim();
  if (n > 62) throw Error(ErrorCode::kInvalidMatrix, "expansion limited to dimension 62");
  if (n == 0) return 1;
  std::unordered_map<std::uint64_t, Rational> memo;
  auto expand = [&](auto&& self, std::uint64_t alive) -> Rational {
    if (alive == 0) return 1;
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    const int first = std::countr_zero(alive);
    std::uint64_t rest = alive & (alive - 1);
    Rational total = 0;
    int sign = 1;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
      const int j = std::countr_zero(scan);
      const Rational& entry = m(static_cast<std::size_t>(first), static_cast<std::size_t>(j));
      if (entry != 0) {
        const Rational sub = self(self, rest & ~(std::uint64_t{1} << j));
        if (sign > 0) total += entry * sub;
        else total -= entry * sub;
      }
      sign = -sign;
    }
    memo.emplace(alive, total);
    return total;
  };
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return expand(expand, all);
}

Rational determinant(const SkewMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t x = 0; x < n; ++x) std::swap(a[col * n + x], a[pivot * n + x]);
      det = -det;
    }
    const Rational head = a[col * n + col];
    det *= head;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      const Rational factor = a[r * n + col] / head;
      for (std::size_t x = col; x < n; ++x) a[r * n + x] -= factor * a[col * n + x];
    }
  }
  return det;
}

}  // namespace aztec
