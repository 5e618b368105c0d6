#pragma once

#include "trialg/matrix.hpp"

#include <optional>
#include <vector>

namespace trialg {

/// Subspace of F^n held by its unique RREF basis, so equality of spans is
/// equality of bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& gens);
  static Subspace from_builder(const EchelonBuilder& b);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat basis_matrix() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  /// Coefficients of v in basis(); nullopt if v is outside the span.
  std::optional<Vec> coords(const Vec& v) const;
  /// Same, but throws Error(NotInSpan).
  Vec coords_or_throw(const Vec& v) const;
  /// Canonical representative of v modulo this subspace (pivot entries zeroed).
  Vec reduce(const Vec& v) const;
  Vec combine(const Vec& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of a subspace under a matrix (columns = images of unit vectors).
Subspace image(const Mat& m, const Subspace& s);
Subspace image(const Mat& m);
/// Preimage of a subspace of the codomain.
Subspace preimage(const Mat& m, const Subspace& target);

}  // namespace trialg
