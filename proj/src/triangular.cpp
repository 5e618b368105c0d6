#include "trialg/triangular.hpp"

#include "trialg/errors.hpp"

#include <string>

namespace trialg {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vec slice(const Vec& v, std::size_t from, std::size_t len) {
  return Vec(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + len));
}

}  // namespace

PairingMap PairingMap::from_graph(const Subspace& graph, std::size_t n_dom, std::size_t n_cod) {
  if (graph.ambient_dim() != n_dom + n_cod) throw Error(ErrorKind::AmbientMismatch, "graph ambient dimension");
  PairingMap out;
  out.graph_ = graph;
  out.n_dom_ = n_dom;
  out.n_cod_ = n_cod;
  std::vector<Vec> dom, cod;
  for (std::size_t i = 0; i < graph.dim(); ++i) {
    if (graph.pivots()[i] >= n_dom) throw Error(ErrorKind::InvalidArgument, "graph is not single-valued");
    // RREF rows with pivots inside the domain block restrict to an RREF basis there
    dom.push_back(slice(graph.basis()[i], 0, n_dom));
    out.images_.push_back(slice(graph.basis()[i], n_dom, n_cod));
  }
  out.domain_ = Subspace::span(graph.field(), n_dom, dom);
  out.codomain_ = Subspace::span(graph.field(), n_cod, out.images_);
  return out;
}

Vec PairingMap::apply(const Vec& x) const {
  const Vec c = domain_.coords_or_throw(x);
  Vec out = zero_vec(domain_.field(), n_cod_);
  for (std::size_t i = 0; i < c.size(); ++i) axpy(out, c[i], images_[i]);
  return out;
}

PairingMap PairingMap::inverse() const {
  if (!injective()) throw Error(ErrorKind::InvalidArgument, "pairing map is not injective");
  std::vector<Vec> swapped;
  for (const auto& g : graph_.basis()) swapped.push_back(concat(slice(g, n_dom_, n_cod_), slice(g, 0, n_dom_)));
  return from_graph(Subspace::span(graph_.field(), n_cod_ + n_dom_, swapped), n_cod_, n_dom_);
}

Vec TriAlgebra::embed_a(const Vec& a) const {
  if (a.size() != dim_a()) throw Error(ErrorKind::ShapeMismatch, "A-element length");
  Vec x = zero_vec(field(), dim());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i];
  return x;
}

Vec TriAlgebra::embed_m(const Vec& m) const {
  if (m.size() != dim_m()) throw Error(ErrorKind::ShapeMismatch, "M-element length");
  Vec x = zero_vec(field(), dim());
  for (std::size_t i = 0; i < m.size(); ++i) x[m_offset() + i] = m[i];
  return x;
}

Vec TriAlgebra::embed_b(const Vec& b) const {
  if (b.size() != dim_b()) throw Error(ErrorKind::ShapeMismatch, "B-element length");
  Vec x = zero_vec(field(), dim());
  for (std::size_t i = 0; i < b.size(); ++i) x[b_offset() + i] = b[i];
  return x;
}

Vec TriAlgebra::part_a(const Vec& x) const { return slice(x, 0, dim_a()); }
Vec TriAlgebra::part_m(const Vec& x) const { return slice(x, m_offset(), dim_m()); }
Vec TriAlgebra::part_b(const Vec& x) const { return slice(x, b_offset(), dim_b()); }

Vec TriAlgebra::act_left(const Vec& a, const Vec& m) const {
  Vec out = zero_vec(field(), dim_m());
  for (std::size_t i = 0; i < dim_a(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_m(); ++j) {
      if (!m[j].is_zero()) axpy(out, a[i] * m[j], m_.left[i * dim_m() + j]);
    }
  }
  return out;
}

Vec TriAlgebra::act_right(const Vec& m, const Vec& b) const {
  Vec out = zero_vec(field(), dim_m());
  for (std::size_t i = 0; i < dim_m(); ++i) {
    if (m[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_b(); ++j) {
      if (!b[j].is_zero()) axpy(out, m[i] * b[j], m_.right[i * dim_b() + j]);
    }
  }
  return out;
}

Mat TriAlgebra::left_action(const Vec& a) const {
  Mat out(field(), dim_m(), dim_m());
  for (std::size_t j = 0; j < dim_m(); ++j) out.set_col(j, act_left(a, unit_vec(field(), dim_m(), j)));
  return out;
}

Mat TriAlgebra::right_action(const Vec& b) const {
  Mat out(field(), dim_m(), dim_m());
  for (std::size_t j = 0; j < dim_m(); ++j) out.set_col(j, act_right(unit_vec(field(), dim_m(), j), b));
  return out;
}

Subspace TriAlgebra::block_a() const { return lift_a(Subspace::full(field(), dim_a())); }
Subspace TriAlgebra::block_m() const { return lift_m(Subspace::full(field(), dim_m())); }
Subspace TriAlgebra::block_b() const { return lift_b(Subspace::full(field(), dim_b())); }

Subspace TriAlgebra::lift_a(const Subspace& s) const {
  std::vector<Vec> g;
  for (const auto& v : s.basis()) g.push_back(embed_a(v));
  return Subspace::span(field(), dim(), g);
}

Subspace TriAlgebra::lift_m(const Subspace& s) const {
  std::vector<Vec> g;
  for (const auto& v : s.basis()) g.push_back(embed_m(v));
  return Subspace::span(field(), dim(), g);
}

Subspace TriAlgebra::lift_b(const Subspace& s) const {
  std::vector<Vec> g;
  for (const auto& v : s.basis()) g.push_back(embed_b(v));
  return Subspace::span(field(), dim(), g);
}

Subspace TriAlgebra::project_a(const Subspace& s) const {
  std::vector<Vec> g;
  for (const auto& v : s.basis()) g.push_back(part_a(v));
  return Subspace::span(field(), dim_a(), g);
}

Subspace TriAlgebra::project_b(const Subspace& s) const {
  std::vector<Vec> g;
  for (const auto& v : s.basis()) g.push_back(part_b(v));
  return Subspace::span(field(), dim_b(), g);
}

namespace {

void validate_bimodule(const FinAlgebra& a, const Bimodule& m, const FinAlgebra& b) {
  if (m.dim_a != a.dim() || m.dim_b != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "bimodule declared over (" + idx(m.dim_a) + "," + idx(m.dim_b) + ") but algebras have dims (" +
                                           idx(a.dim()) + "," + idx(b.dim()) + ")");
  }
  if (m.left.size() != m.dim_a * m.dim_m || m.right.size() != m.dim_m * m.dim_b) {
    throw Error(ErrorKind::DimMismatch, "action tables do not match dim_a, dim_m, dim_b");
  }
  if (m.names.size() != m.dim_m) throw Error(ErrorKind::DimMismatch, "bimodule basis label count");
  for (const auto& v : m.left) {
    if (v.size() != m.dim_m) throw Error(ErrorKind::DimMismatch, "left action value length");
    for (const auto& s : v)
      if (s.field() != m.field) throw Error(ErrorKind::FieldMismatch, "left action entry");
  }
  for (const auto& v : m.right) {
    if (v.size() != m.dim_m) throw Error(ErrorKind::DimMismatch, "right action value length");
    for (const auto& s : v)
      if (s.field() != m.field) throw Error(ErrorKind::FieldMismatch, "right action entry");
  }
  if (a.field() != m.field || b.field() != m.field) throw Error(ErrorKind::FieldMismatch, "A, M, B fields differ");
}

}  // namespace

TriAlgebra build_triangular(FinAlgebra a, Bimodule m, FinAlgebra b, bool allow_zero_m) {
  validate_bimodule(a, m, b);
  if (m.dim_m == 0 && !allow_zero_m) throw Error(ErrorKind::ZeroModule, "M = 0");

  TriAlgebra t;
  t.a_ = std::move(a);
  t.b_ = std::move(b);
  t.m_ = std::move(m);
  const Field f = t.m_.field;
  const std::size_t da = t.a_.dim(), dm = t.m_.dim_m, db = t.b_.dim();

  // module axioms on basis triples
  for (std::size_t j = 0; j < dm; ++j) {
    const Vec mj = unit_vec(f, dm, j);
    if (t.act_left(t.a_.unit(), mj) != mj) throw Error(ErrorKind::UnitLawViolation, "1_A fails on M basis " + idx(j));
    if (t.act_right(mj, t.b_.unit()) != mj) throw Error(ErrorKind::UnitLawViolation, "1_B fails on M basis " + idx(j));
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = 0; k < da; ++k) {
        const Vec lhs = t.act_left(t.a_.product(i, k), mj);
        const Vec rhs = t.act_left(t.a_.basis_vec(i), t.act_left(t.a_.basis_vec(k), mj));
        if (lhs != rhs) throw Error(ErrorKind::NonAssociative, "left module (a" + idx(i) + ",a" + idx(k) + ",m" + idx(j) + ")");
      }
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t k = 0; k < db; ++k) {
        const Vec lhs = t.act_right(mj, t.b_.product(i, k));
        const Vec rhs = t.act_right(t.act_right(mj, t.b_.basis_vec(i)), t.b_.basis_vec(k));
        if (lhs != rhs) throw Error(ErrorKind::NonAssociative, "right module (m" + idx(j) + ",b" + idx(i) + ",b" + idx(k) + ")");
      }
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = 0; k < db; ++k) {
        const Vec lhs = t.act_right(t.act_left(t.a_.basis_vec(i), mj), t.b_.basis_vec(k));
        const Vec rhs = t.act_left(t.a_.basis_vec(i), t.act_right(mj, t.b_.basis_vec(k)));
        if (lhs != rhs) throw Error(ErrorKind::NonAssociative, "bimodule (a" + idx(i) + ",m" + idx(j) + ",b" + idx(k) + ")");
      }
  }

  const std::size_t n = da + dm + db;
  std::vector<std::string> names = t.a_.names();
  names.insert(names.end(), t.m_.names.begin(), t.m_.names.end());
  names.insert(names.end(), t.b_.names().begin(), t.b_.names().end());
  std::vector<Vec> products(n * n, zero_vec(f, n));
  auto put = [&](std::size_t i, std::size_t j, std::size_t off, const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k) products[i * n + j][off + k] = v[k];
  };
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) put(i, j, 0, t.a_.product(i, j));
    for (std::size_t j = 0; j < dm; ++j) put(i, da + j, da, t.m_.left[i * dm + j]);
  }
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < db; ++j) put(da + i, da + dm + j, da, t.m_.right[i * db + j]);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) put(da + dm + i, da + dm + j, da + dm, t.b_.product(i, j));
  Vec unit = zero_vec(f, n);
  for (std::size_t i = 0; i < da; ++i) unit[i] = t.a_.unit()[i];
  for (std::size_t i = 0; i < db; ++i) unit[da + dm + i] = t.b_.unit()[i];
  t.total_ = FinAlgebra::create(f, names, products, unit);

  auto kernel_of_action = [&](std::size_t dim_side, bool left) {
    if (dim_side == 0) return Subspace::zero(f, 0);
    Mat act(f, dm * dm, dim_side);
    for (std::size_t i = 0; i < dim_side; ++i) {
      for (std::size_t j = 0; j < dm; ++j) {
        const Vec& v = left ? t.m_.left[i * dm + j] : t.m_.right[j * db + i];
        for (std::size_t k = 0; k < dm; ++k) act.at(j * dm + k, i) = v[k];
      }
    }
    return kernel_basis(act);
  };
  t.left_faithful_ = kernel_of_action(da, true).is_zero();
  t.right_faithful_ = kernel_of_action(db, false).is_zero();
  return t;
}

Subspace center_T(const TriAlgebra& t) {
  const Field f = t.field();
  const Subspace za = center(t.A());
  const Subspace zb = center(t.B());
  const std::size_t ka = za.dim(), kb = zb.dim(), dm = t.dim_m();
  // unknowns: coordinates of a in Z(A), then of b in Z(B); equations a m_j - m_j b = 0
  std::vector<Vec> gens;
  if (ka + kb == 0) return Subspace::zero(f, t.dim());
  Mat sys(f, dm * dm, ka + kb);
  for (std::size_t j = 0; j < dm; ++j) {
    const Vec mj = unit_vec(f, dm, j);
    for (std::size_t i = 0; i < ka; ++i) {
      const Vec v = t.act_left(za.basis()[i], mj);
      for (std::size_t k = 0; k < dm; ++k) sys.at(j * dm + k, i) = v[k];
    }
    for (std::size_t i = 0; i < kb; ++i) {
      const Vec v = t.act_right(mj, zb.basis()[i]);
      for (std::size_t k = 0; k < dm; ++k) sys.at(j * dm + k, ka + i) = -v[k];
    }
  }
  const Subspace sol = kernel_basis(sys);
  for (const auto& c : sol.basis()) {
    const Vec a = za.combine(Vec(c.begin(), c.begin() + static_cast<long>(ka)));
    const Vec b = zb.combine(Vec(c.begin() + static_cast<long>(ka), c.end()));
    gens.push_back(t.embed_a(a) + t.embed_b(b));
  }
  return Subspace::span(f, t.dim(), gens);
}

Annihilators annihilators(const TriAlgebra& t) {
  const Field f = t.field();
  const std::size_t n = t.dim(), dm = t.dim_m();
  Annihilators out;
  Mat left_rows(f, n * dm, n), right_rows(f, n * dm, n);
  for (std::size_t j = 0; j < dm; ++j) {
    const Vec mj = t.embed_m(unit_vec(f, dm, j));
    const Mat r = t.total().right_mult(mj);  // x -> x m
    const Mat l = t.total().left_mult(mj);   // x -> m x
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t c = 0; c < n; ++c) {
        left_rows.at(j * n + row, c) = r.at(row, c);
        right_rows.at(j * n + row, c) = l.at(row, c);
      }
  }
  out.lann_m = kernel_basis(left_rows);
  out.rann_m = kernel_basis(right_rows);
  out.left_kernel = t.project_a(intersect(out.lann_m, t.block_a()));
  out.right_kernel = t.project_b(intersect(out.rann_m, t.block_b()));
  if (out.left_kernel.is_zero() && out.right_kernel.is_zero()) {
    if (out.lann_m != sum(t.block_m(), t.block_b())) throw TheoremViolation("lann_rann", "Lann_T(M) differs from M + B");
    if (out.rann_m != sum(t.block_a(), t.block_m())) throw TheoremViolation("lann_rann", "Rann_T(M) differs from A + M");
  }
  return out;
}

PairingMap tau_iso(const TriAlgebra& t) {
  if (!t.faithful()) throw Error(ErrorKind::NotFaithful, "tau needs a faithful bimodule");
  const Field f = t.field();
  std::vector<Vec> graph;
  const Subspace z_t = center_T(t);
  for (const auto& z : z_t.basis()) graph.push_back(concat(t.part_a(z), t.part_b(z)));
  const PairingMap tau = PairingMap::from_graph(Subspace::span(f, t.dim_a() + t.dim_b(), graph), t.dim_a(), t.dim_b());
  for (std::size_t i = 0; i < tau.domain().dim(); ++i) {
    const Vec& a = tau.domain().basis()[i];
    for (std::size_t j = 0; j < t.dim_m(); ++j) {
      const Vec mj = unit_vec(f, t.dim_m(), j);
      if (t.act_left(a, mj) != t.act_right(mj, tau.images()[i])) throw TheoremViolation("tau", "a m != m tau(a)");
    }
  }
  if (!tau.injective()) throw TheoremViolation("tau", "tau is not injective");
  return tau;
}

FaithfulQuotient faithful_quotient(const TriAlgebra& t) {
  const auto ann = annihilators(t);
  FaithfulQuotient out;
  out.a_quotient = quotient(t.A(), ann.left_kernel);
  out.b_quotient = quotient(t.B(), ann.right_kernel);
  const auto& la = out.a_quotient.lift;
  const auto& lb = out.b_quotient.lift;
  Bimodule m = t.M();
  m.dim_a = la.size();
  m.dim_b = lb.size();
  m.left.clear();
  m.right.clear();
  for (auto i : la)
    for (std::size_t j = 0; j < t.dim_m(); ++j) m.left.push_back(t.M().left[i * t.dim_m() + j]);
  for (std::size_t j = 0; j < t.dim_m(); ++j)
    for (auto i : lb) m.right.push_back(t.M().right[j * t.dim_b() + i]);
  out.algebra = build_triangular(out.a_quotient.algebra, m, out.b_quotient.algebra, t.dim_m() == 0);
  if (!out.algebra.faithful()) throw TheoremViolation("faithful_quotient", "quotient is not faithful");
  return out;
}

NilpotencyCheck nilpotency_T(const TriAlgebra& t, const Vec& x) {
  NilpotencyCheck out;
  out.index = nilpotency_index(t.total(), x);
  out.a_part_nilpotent = nilpotency_index(t.A(), t.part_a(x)).has_value();
  out.b_part_nilpotent = nilpotency_index(t.B(), t.part_b(x)).has_value();
  if (out.index.has_value() != (out.a_part_nilpotent && out.b_part_nilpotent)) {
    throw TheoremViolation("nilpo", "nilpotency of x disagrees with that of its diagonal parts");
  }
  return out;
}

Subspace nil_radical_T(const TriAlgebra& t) {
  const Subspace ra = radical(t.A());
  const Subspace rb = radical(t.B());
  const Subspace out = sum(sum(t.lift_a(ra), t.block_m()), t.lift_b(rb));
  if (ra.is_zero() && rb.is_zero() && out != t.block_m()) throw TheoremViolation("kothe", "Nil*(T) differs from M");
  return out;
}

}  // namespace trialg
