#pragma once

#include "trialg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace trialg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
/// Field of a vector's entries; throws FieldMismatch on mixed tags.
Field common_field(const Vec& v, Field fallback);

/// Dense row-major matrix over one field.
class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  /// Throws FieldMismatch on mixed entries, ShapeMismatch on ragged rows.
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);

  Mat transpose() const;
  Vec operator*(const Vec& v) const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with zero rows kept at the bottom.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Particular solution of m x = rhs with every free coordinate zero.
std::optional<Vec> solve_linear(const Mat& m, const Vec& rhs);
std::optional<Mat> inverse(const Mat& m);

/// Row space kept in reduced row-echelon form as rows arrive. Reduction of a
/// new row only touches pivot columns where it is nonzero, so long sparse
/// constraint streams stay cheap.
class EchelonBuilder {
 public:
  EchelonBuilder(Field f, std::size_t width);

  /// Returns true if the row enlarged the span.
  bool add(Vec v);
  /// v minus its projection onto the span along pivot columns.
  Vec reduce(Vec v) const;

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  Field field() const { return field_; }
  /// Rows sorted by pivot column.
  std::vector<Vec> rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  Field field_;
  std::size_t width_;
  std::vector<Vec> rows_;
  // pivot column -> index into rows_, -1 for free columns
  std::vector<long> pivot_row_;
};

}  // namespace trialg
