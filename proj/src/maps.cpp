#include "trialg/maps.hpp"

#include "trialg/errors.hpp"

namespace trialg {

Vec flatten(const LinMap& f) {
  Vec v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t k = 0; k < f.rows(); ++k)
    for (std::size_t j = 0; j < f.cols(); ++j) v.push_back(f.at(k, j));
  return v;
}

LinMap unflatten_linear(Field fld, std::size_t dim, const Vec& v) {
  if (v.size() != dim * dim) throw Error(ErrorKind::ShapeMismatch, "flattened linear map length");
  LinMap f(fld, dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) f.at(k, j) = v[k * dim + j];
  return f;
}

BilinMap BilinMap::zero(Field f, std::size_t dim) {
  BilinMap d;
  d.field_ = f;
  d.dim_ = dim;
  d.values_.assign(dim * dim, zero_vec(f, dim));
  return d;
}

BilinMap BilinMap::from_values(Field f, std::size_t dim, std::vector<Vec> values) {
  if (values.size() != dim * dim) throw Error(ErrorKind::ShapeMismatch, "bilinear value count");
  for (const auto& v : values) {
    if (v.size() != dim) throw Error(ErrorKind::ShapeMismatch, "bilinear value length");
    for (const auto& s : v)
      if (s.field() != f) throw Error(ErrorKind::FieldMismatch, "bilinear entry");
  }
  BilinMap d;
  d.field_ = f;
  d.dim_ = dim;
  d.values_ = std::move(values);
  return d;
}

BilinMap BilinMap::unflatten(Field f, std::size_t dim, const Vec& v) {
  if (v.size() != dim * dim * dim) throw Error(ErrorKind::ShapeMismatch, "flattened bilinear map length");
  BilinMap d = zero(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) d.value(i, j)[k] = v[(i * dim + j) * dim + k];
  return d;
}

Vec BilinMap::apply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "bilinear argument length");
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], value(i, j));
    }
  }
  return out;
}

Vec BilinMap::flatten() const {
  Vec v;
  v.reserve(dim_ * dim_ * dim_);
  for (const auto& val : values_) v.insert(v.end(), val.begin(), val.end());
  return v;
}

bool BilinMap::is_zero() const {
  for (const auto& v : values_)
    if (!trialg::is_zero(v)) return false;
  return true;
}

BilinMap BilinMap::operator+(const BilinMap& o) const {
  if (dim_ != o.dim_) throw Error(ErrorKind::ShapeMismatch, "bilinear sum");
  BilinMap d = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) d.values_[i] = values_[i] + o.values_[i];
  return d;
}

BilinMap BilinMap::operator-(const BilinMap& o) const {
  if (dim_ != o.dim_) throw Error(ErrorKind::ShapeMismatch, "bilinear difference");
  BilinMap d = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) d.values_[i] = values_[i] - o.values_[i];
  return d;
}

BilinMap BilinMap::compose_left(const LinMap& f) const {
  BilinMap d = *this;
  for (auto& v : d.values_) v = f * v;
  return d;
}

LinMap left_multiplication(const FinAlgebra& alg, const Vec& c) { return alg.left_mult(c); }

}  // namespace trialg
