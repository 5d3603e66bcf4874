#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cechrec {

/// Arithmetic in GF(p) for a prime p < 2^16.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  Element add(Element a, Element b) const noexcept { return (a + b) % p_; }
  Element sub(Element a, Element b) const noexcept { return (a + p_ - b) % p_; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept { return (a * b) % p_; }
  Element inv(Element a) const { return inverse_.at(a); }
  /// Image of an integer (possibly negative) in GF(p).
  Element from_int(long long v) const noexcept;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::vector<Element> inverse_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  using Element = PrimeField::Element;

  FieldMatrix(std::size_t rows, std::size_t cols, const PrimeField& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long value) { (*this)(r, c) = field_.from_int(value); }

  std::size_t rank() const;
  /// Columns form a basis of { v : M v = 0 }.
  FieldMatrix nullspace() const;
  /// [this | other]; row counts must match.
  FieldMatrix hcat(const FieldMatrix& other) const;
  FieldMatrix operator*(const FieldMatrix& other) const;
  bool is_zero() const noexcept;

 private:
  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank_gf2() const;

  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<Element> data_;
};

}  // namespace cechrec
