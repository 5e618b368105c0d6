#pragma once

#include "trialg/algebra.hpp"

#include <vector>

namespace trialg {

/// Linear maps are square matrices whose column j is the image of e_j.
using LinMap = Mat;

/// Flattening of a linear map: entry [k][j] lands at index k * dim + j.
Vec flatten(const LinMap& f);
LinMap unflatten_linear(Field fld, std::size_t dim, const Vec& v);

/// Bilinear map on F^dim stored as D(e_i, e_j) for every basis pair.
class BilinMap {
 public:
  BilinMap() = default;
  static BilinMap zero(Field f, std::size_t dim);
  /// values[i * dim + j] = D(e_i, e_j)
  static BilinMap from_values(Field f, std::size_t dim, std::vector<Vec> values);
  /// Flattening: coefficient of e_k in D(e_i, e_j) at index (i * dim + j) * dim + k.
  static BilinMap unflatten(Field f, std::size_t dim, const Vec& v);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& value(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Vec& value(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }
  Vec apply(const Vec& x, const Vec& y) const;
  Vec flatten() const;
  bool is_zero() const;

  BilinMap operator+(const BilinMap& o) const;
  BilinMap operator-(const BilinMap& o) const;
  /// Post-composition with a linear map: x, y -> f(D(x, y)).
  BilinMap compose_left(const LinMap& f) const;
  friend bool operator==(const BilinMap& a, const BilinMap& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.values_ == b.values_;
  }
  friend bool operator!=(const BilinMap& a, const BilinMap& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Vec> values_;
};

/// Linear map x -> c x (left multiplication) viewed as a LinMap.
LinMap left_multiplication(const FinAlgebra& alg, const Vec& c);

}  // namespace trialg
