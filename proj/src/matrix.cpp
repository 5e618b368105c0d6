#include "trialg/matrix.hpp"

#include "trialg/errors.hpp"

#include <algorithm>
#include <string>

namespace trialg {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ShapeMismatch, "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

}  // namespace

Vec operator+(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r;
  r.reserve(a.size());
  for (const auto& s : a) r.push_back(-s);
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& s : r) s *= c;
  return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  check_len(a, b);
  if (c.is_zero()) return;
  const Scalar neg = -c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i].sub_mul(neg, b[i]);
  }
}

Field common_field(const Vec& v, Field fallback) {
  if (v.empty()) return fallback;
  const Field f = v.front().field();
  for (const auto& s : v) {
    if (s.field() != f) throw Error(ErrorKind::FieldMismatch, "mixed field tags in vector");
  }
  return f;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != f) throw Error(ErrorKind::FieldMismatch, "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  return from_rows(f, rows, cols).transpose();
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Mat::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    const Scalar neg = -v[c];
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = at(r, c);
      if (!e.is_zero()) out[r].sub_mul(neg, e);
    }
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
  Mat out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      const Scalar neg = -a;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c).sub_mul(neg, b);
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonBuilder::EchelonBuilder(Field f, std::size_t width) : field_(f), width_(width), pivot_row_(width, -1) {}

Vec EchelonBuilder::reduce(Vec v) const {
  if (v.size() != width_) throw Error(ErrorKind::ShapeMismatch, "row width " + std::to_string(v.size()) + " vs " + std::to_string(width_));
  // rows are fully reduced, so clearing one pivot column never disturbs another
  for (std::size_t c = 0; c < width_; ++c) {
    const long r = pivot_row_[c];
    if (r < 0 || v[c].is_zero()) continue;
    const Scalar coef = v[c];
    const Vec& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = c; k < width_; ++k) {
      if (!row[k].is_zero()) v[k].sub_mul(coef, row[k]);
    }
  }
  return v;
}

bool EchelonBuilder::add(Vec v) {
  for (const auto& s : v) {
    if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "row entry in " + s.field().to_string() + ", expected " + field_.to_string());
  }
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < width_ && v[lead].is_zero()) ++lead;
  if (lead == width_) return false;
  const Scalar inv = v[lead].inverse();
  for (std::size_t k = lead; k < width_; ++k) {
    if (!v[k].is_zero()) v[k] *= inv;
  }
  for (auto& row : rows_) {
    if (row[lead].is_zero()) continue;
    const Scalar coef = row[lead];
    for (std::size_t k = lead; k < width_; ++k) {
      if (!v[k].is_zero()) row[k].sub_mul(coef, v[k]);
    }
  }
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBuilder::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<Vec> EchelonBuilder::rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < width_; ++c) {
    if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
  }
  return out;
}

RrefResult rref(const Mat& m) {
  EchelonBuilder b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  RrefResult out{Mat(m.field(), m.rows(), m.cols()), b.pivots()};
  const auto rows = b.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.reduced.at(r, c) = rows[r][c];
  return out;
}

std::size_t rank(const Mat& m) {
  EchelonBuilder b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.rank();
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "rhs length " + std::to_string(rhs.size()) + " vs " + std::to_string(m.rows()) + " rows");
  }
  const Field f = m.field();
  if (common_field(rhs, f) != f) throw Error(ErrorKind::FieldMismatch, "rhs field");
  // augmented system; a pivot in the last column means inconsistency
  EchelonBuilder b(f, m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    row.push_back(rhs[r]);
    b.add(std::move(row));
  }
  const auto pivots = b.pivots();
  const auto rows = b.rows();
  Vec x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = rows[i][m.cols()];
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  EchelonBuilder b(m.field(), 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = m.row(r);
    for (std::size_t c = 0; c < n; ++c) row.push_back(r == c ? Scalar::one(m.field()) : Scalar::zero(m.field()));
    b.add(std::move(row));
  }
  const auto pivots = b.pivots();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  const auto rows = b.rows();
  Mat inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
  return inv;
}

}  // namespace trialg
