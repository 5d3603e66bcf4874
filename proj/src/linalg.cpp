#include "cechrec/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "cechrec/error.hpp"

namespace cechrec {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw Error(Errc::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a prime below 65536");
  inverse_.assign(p, 0);
  inverse_[1] = 1;
  for (std::uint32_t a = 2; a < p; ++a) inverse_[a] = p - static_cast<Element>((std::uint64_t(p / a) * inverse_[p % a]) % p);
}

PrimeField::Element PrimeField::from_int(long long v) const noexcept {
  const long long m = v % static_cast<long long>(p_);
  return static_cast<Element>(m < 0 ? m + p_ : m);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

std::vector<std::size_t> FieldMatrix::rref() {
  std::vector<std::size_t> pivots;
  const Element p = field_.characteristic();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && (*this)(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(pivot * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>(row * cols_));
    Element* prow = &data_[row * cols_];
    const Element scale = field_.inv(prow[col]);
    if (scale != 1)
      for (std::size_t j = col; j < cols_; ++j) prow[j] = (prow[j] * scale) % p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      Element* target = &data_[r * cols_];
      const Element factor = target[col];
      if (factor == 0) continue;
      const Element f = p - factor;
      for (std::size_t j = col; j < cols_; ++j) target[j] = (target[j] + f * prow[j]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t FieldMatrix::rank_gf2() const {
  const std::size_t words = (cols_ + 63) / 64;
  std::vector<std::uint64_t> bits(rows_ * words, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c)) bits[r * words + c / 64] |= std::uint64_t(1) << (c % 64);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t(1) << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < words; ++k) std::swap(bits[pivot * words + k], bits[rank * words + k]);
    for (std::size_t r = rank + 1; r < rows_; ++r)
      if (bits[r * words + w] & mask)
        for (std::size_t k = w; k < words; ++k) bits[r * words + k] ^= bits[rank * words + k];
    ++rank;
  }
  return rank;
}

std::size_t FieldMatrix::rank() const {
  if (field_.characteristic() == 2) return rank_gf2();
  FieldMatrix copy = *this;
  return copy.rref().size();
}

FieldMatrix FieldMatrix::nullspace() const {
  FieldMatrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FieldMatrix basis(cols_, free_cols.size(), field_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = field_.neg(reduced(i, f));
  }
  return basis;
}

FieldMatrix FieldMatrix::hcat(const FieldMatrix& other) const {
  if (other.rows_ != rows_ || !(other.field_ == field_))
    throw Error(Errc::InvalidArgument, "hcat of incompatible matrices");
  FieldMatrix out(rows_, cols_ + other.cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(&data_[r * cols_], cols_, &out.data_[r * out.cols_]);
    std::copy_n(&other.data_[r * other.cols_], other.cols_, &out.data_[r * out.cols_ + cols_]);
  }
  return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
  if (cols_ != other.rows_ || !(other.field_ == field_))
    throw Error(Errc::InvalidArgument, "product of incompatible matrices");
  FieldMatrix out(rows_, other.cols_, field_);
  const Element p = field_.characteristic();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Element a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = (out(i, j) + a * other(k, j)) % p;
    }
  return out;
}

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

}  // namespace cechrec
