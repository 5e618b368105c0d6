#include "trialg/subspace.hpp"

#include "trialg/errors.hpp"

#include <string>

namespace trialg {

namespace {

void check_ambient(const Subspace& a, std::size_t n) {
  if (a.ambient_dim() != n) {
    throw Error(ErrorKind::AmbientMismatch, "ambient " + std::to_string(a.ambient_dim()) + " vs " + std::to_string(n));
  }
}

void check_pair(const Subspace& a, const Subspace& b) {
  check_ambient(a, b.ambient_dim());
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

Subspace Subspace::zero(Field f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  Subspace s = zero(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& gens) {
  EchelonBuilder b(f, ambient);
  for (const auto& g : gens) b.add(g);
  return from_builder(b);
}

Subspace Subspace::from_builder(const EchelonBuilder& b) {
  Subspace s = zero(b.field(), b.width());
  s.basis_ = b.rows();
  s.pivots_ = b.pivots();
  return s;
}

Mat Subspace::basis_matrix() const { return Mat::from_rows(field_, ambient_, basis_); }

Vec Subspace::reduce(const Vec& v) const {
  check_ambient(*this, v.size());
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (r[c].is_zero()) continue;
    const Scalar coef = r[c];
    const Vec& row = basis_[i];
    for (std::size_t k = c; k < ambient_; ++k) {
      if (!row[k].is_zero()) r[k].sub_mul(coef, row[k]);
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return trialg::is_zero(reduce(v)); }

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (!trialg::is_zero(reduce(v))) return std::nullopt;
  Vec c;
  c.reserve(basis_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

Vec Subspace::coords_or_throw(const Vec& v) const {
  auto c = coords(v);
  if (!c) throw Error(ErrorKind::NotInSpan, "vector outside a " + std::to_string(dim()) + "-dim subspace");
  return *c;
}

Vec Subspace::combine(const Vec& coeffs) const {
  if (coeffs.size() != basis_.size()) throw Error(ErrorKind::ShapeMismatch, "coefficient count");
  Vec out = zero_vec(field_, ambient_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) axpy(out, coeffs[i], basis_[i]);
  return out;
}

bool Subspace::contains(const Subspace& o) const {
  check_pair(*this, o);
  for (const auto& v : o.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const Mat& m) {
  const auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(m.field(), n, f);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced.at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  std::vector<Vec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  // x = sum c_i a_i lies in b iff its remainder modulo b vanishes; linear in c
  std::vector<Vec> cols;
  for (const auto& v : a.basis()) cols.push_back(b.reduce(v));
  if (cols.empty()) return Subspace::zero(a.field(), a.ambient_dim());
  const Mat rem = Mat::from_columns(a.field(), a.ambient_dim(), cols);
  const Subspace ker = kernel_basis(rem);
  std::vector<Vec> gens;
  for (const auto& c : ker.basis()) gens.push_back(a.combine(c));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace image(const Mat& m, const Subspace& s) {
  check_ambient(s, m.cols());
  std::vector<Vec> gens;
  for (const auto& v : s.basis()) gens.push_back(m * v);
  return Subspace::span(m.field(), m.rows(), gens);
}

Subspace image(const Mat& m) { return image(m, Subspace::full(m.field(), m.cols())); }

Subspace preimage(const Mat& m, const Subspace& target) {
  check_ambient(target, m.rows());
  // x with m x reduced modulo target equal to zero
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(target.reduce(m.col(j)));
  if (cols.empty()) return Subspace::zero(m.field(), 0);
  return kernel_basis(Mat::from_columns(m.field(), m.rows(), cols));
}

}  // namespace trialg
