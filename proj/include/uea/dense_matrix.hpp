#ifndef UEA_DENSE_MATRIX_HPP
#define UEA_DENSE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "uea/scalar.hpp"

namespace uea {

/// Small square or rectangular dense matrix, used for adjoint matrices of
/// the base algebra and for changes of basis.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_{field}, rows_{rows}, cols_{cols}, data_(rows * cols, Scalar::zero(field)) {}

  static DenseMatrix identity(Field field, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& other) const;
  DenseMatrix pow(std::uint64_t exponent) const;
  /// std::nullopt when singular.
  std::optional<DenseMatrix> inverse() const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

}  // namespace uea

#endif  // UEA_DENSE_MATRIX_HPP
