#ifndef SEQLAB_MATRIX_HPP
#define SEQLAB_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqlab/errors.hpp"

namespace seqlab {

// Dense row-major matrix of doubles. The workhorse container for every
// parameter and activation in the pipeline; sequence lengths stay at desk
// scale so there is no sparse or blocked variant.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  void fill(double v) { data_.assign(data_.size(), v); }
  void set_zero() { fill(0.0); }

  std::string shape_str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Standard product; throws DimensionError naming both shapes on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);
void add_in_place(Matrix& a, const Matrix& b);

// Row-wise softmax with per-row max subtraction; rows of the result are
// nonnegative and sum to 1 within 1e-9 for any finite input.
Matrix row_softmax(const Matrix& m);

// log(sum_i exp(v_i)) computed max-shifted. Returns v[0] exactly for a
// single element. Throws DimensionError on an empty span.
double log_sum_exp(std::span<const double> v);

double sigmoid(double x);
Matrix sigmoid(const Matrix& m);
Matrix tanh_elem(const Matrix& m);

bool all_finite(const Matrix& m);
// Throws NumericError mentioning `context` if any entry is NaN/Inf.
void check_finite(const Matrix& m, const std::string& context);

}  // namespace seqlab

#endif  // SEQLAB_MATRIX_HPP
