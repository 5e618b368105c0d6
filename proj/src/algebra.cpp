#include "trialg/algebra.hpp"

#include "trialg/errors.hpp"

#include <cstdlib>
#include <string>

namespace trialg {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void check_vec(Field f, std::size_t n, const Vec& v, const std::string& what) {
  if (v.size() != n) throw Error(ErrorKind::ShapeMismatch, what + " has length " + idx(v.size()) + ", expected " + idx(n));
  for (const auto& s : v) {
    if (s.field() != f) throw Error(ErrorKind::FieldMismatch, what + " entry in " + s.field().to_string());
  }
}

}  // namespace

FinAlgebra FinAlgebra::create(Field f, std::vector<std::string> names, std::vector<Vec> products, Vec unit) {
  const std::size_t n = names.size();
  if (products.size() != n * n) {
    throw Error(ErrorKind::ShapeMismatch, "expected " + idx(n * n) + " basis products, got " + idx(products.size()));
  }
  for (std::size_t k = 0; k < products.size(); ++k) check_vec(f, n, products[k], "product e" + idx(k / n) + "*e" + idx(k % n));
  check_vec(f, n, unit, "unit");

  FinAlgebra alg;
  alg.field_ = f;
  alg.names_ = std::move(names);
  alg.products_ = std::move(products);
  alg.unit_ = std::move(unit);

  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = alg.basis_vec(i);
    if (alg.mul(alg.unit_, e) != e || alg.mul(e, alg.unit_) != e) {
      throw Error(ErrorKind::UnitLawViolation, "unit fails on basis element " + idx(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = alg.mul(alg.product(i, j), alg.basis_vec(k));
        const Vec rhs = alg.mul(alg.basis_vec(i), alg.product(j, k));
        if (lhs != rhs) throw Error(ErrorKind::NonAssociative, "(" + idx(i) + "," + idx(j) + "," + idx(k) + ")");
      }
  return alg;
}

Vec FinAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::ShapeMismatch, "operand length in product");
  Vec out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vec& p = product(i, j);
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return out;
}

Vec FinAlgebra::commutator(const Vec& x, const Vec& y) const { return mul(x, y) - mul(y, x); }

Mat FinAlgebra::left_mult(const Vec& x) const {
  Mat m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(x, basis_vec(j)));
  return m;
}

Mat FinAlgebra::right_mult(const Vec& x) const {
  Mat m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(basis_vec(j), x));
  return m;
}

bool FinAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

Subspace twisted_center(const FinAlgebra& alg, const Mat& f) {
  const std::size_t n = alg.dim();
  if (f.rows() != n || f.cols() != n) throw Error(ErrorKind::ShapeMismatch, "twisting map shape");
  EchelonBuilder rows(alg.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat c = alg.left_mult(f.col(i)) - alg.right_mult(alg.basis_vec(i));
    for (std::size_t r = 0; r < n; ++r) rows.add(c.row(r));
  }
  return kernel_basis(Mat::from_rows(alg.field(), n, Subspace::from_builder(rows).basis()));
}

Subspace center(const FinAlgebra& alg) { return twisted_center(alg, Mat::identity(alg.field(), alg.dim())); }

Subspace commutator_span(const FinAlgebra& alg) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) gens.push_back(alg.commutator(alg.basis_vec(i), alg.basis_vec(j)));
  return Subspace::span(alg.field(), alg.dim(), gens);
}

Subspace product_space(const FinAlgebra& alg, const Subspace& s, const Subspace& t) {
  std::vector<Vec> gens;
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) gens.push_back(alg.mul(x, y));
  return Subspace::span(alg.field(), alg.dim(), gens);
}

bool is_two_sided_ideal(const FinAlgebra& alg, const Subspace& s) {
  for (const auto& x : s.basis()) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const Vec e = alg.basis_vec(i);
      if (!s.contains(alg.mul(e, x)) || !s.contains(alg.mul(x, e))) return false;
    }
  }
  return true;
}

std::optional<std::size_t> nilpotency_index(const FinAlgebra& alg, const Vec& x) {
  if (is_zero(x)) return 1;
  Vec power = x;
  for (std::size_t k = 2; k <= alg.dim() + 1; ++k) {
    power = alg.mul(power, x);
    if (is_zero(power)) return k;
  }
  return std::nullopt;
}

Quotient quotient(const FinAlgebra& alg, const Subspace& ideal) {
  if (!is_two_sided_ideal(alg, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient by a non-ideal");
  const std::size_t n = alg.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  Quotient out;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) out.lift.push_back(c);
  }
  const std::size_t k = out.lift.size();
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec cls;
    cls.reserve(k);
    for (auto c : out.lift) cls.push_back(r[c]);
    return cls;
  };
  out.projection = Mat(alg.field(), k, n);
  for (std::size_t j = 0; j < n; ++j) out.projection.set_col(j, project(alg.basis_vec(j)));
  std::vector<std::string> names;
  std::vector<Vec> products;
  for (auto a : out.lift) names.push_back(alg.names()[a]);
  for (auto a : out.lift)
    for (auto b : out.lift) products.push_back(project(alg.product(a, b)));
  out.algebra = FinAlgebra::create(alg.field(), names, products, project(alg.unit()));
  return out;
}

FinAlgebra subalgebra(const FinAlgebra& alg, const Subspace& s, const std::vector<std::string>& names) {
  const std::size_t k = s.dim();
  const Field f = alg.field();
  std::vector<Vec> products;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto c = s.coords(alg.mul(s.basis()[i], s.basis()[j]));
      if (!c) throw Error(ErrorKind::InvalidArgument, "subspace is not closed under multiplication");
      products.push_back(*c);
    }
  // unit u = sum c_i b_i with u b_j = b_j = b_j u
  Mat sys(f, 2 * k * alg.dim(), k);
  Vec rhs = zero_vec(f, 2 * k * alg.dim());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Vec l = alg.mul(s.basis()[i], s.basis()[j]);
      const Vec r = alg.mul(s.basis()[j], s.basis()[i]);
      for (std::size_t t = 0; t < alg.dim(); ++t) {
        sys.at((2 * j) * alg.dim() + t, i) = l[t];
        sys.at((2 * j + 1) * alg.dim() + t, i) = r[t];
      }
    }
    for (std::size_t t = 0; t < alg.dim(); ++t) {
      rhs[(2 * j) * alg.dim() + t] = s.basis()[j][t];
      rhs[(2 * j + 1) * alg.dim() + t] = s.basis()[j][t];
    }
  }
  auto unit = solve_linear(sys, rhs);
  if (!unit) throw Error(ErrorKind::InvalidArgument, "subspace has no unit of its own");
  std::vector<std::string> labels = names;
  if (labels.empty()) {
    for (std::size_t i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i));
  }
  if (labels.size() != k) throw Error(ErrorKind::ShapeMismatch, "subalgebra label count");
  return FinAlgebra::create(f, labels, products, *unit);
}

FinAlgebra product_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "product algebra factors");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  const Field f = a.field();
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::vector<Vec> products(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) products[i * n + j][k] = a.product(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) products[(na + i) * n + na + j][na + k] = b.product(i, j)[k];
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return FinAlgebra::create(f, names, products, unit);
}

namespace {

Scalar trace(const Mat& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

Subspace trace_form_kernel(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Field f = alg.field();
  if (f.is_prime() && f.characteristic() <= n) {
    throw Error(ErrorKind::CharTooSmall, "characteristic " + std::to_string(f.characteristic()) + " <= dim " + std::to_string(n));
  }
  // x = sum x_i e_i is radical iff sum_i x_i tr(L_{e_i e_j}) = 0 for every j
  Mat gram_t(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_t.at(j, i) = trace(alg.left_mult(alg.product(i, j)));
  return kernel_basis(gram_t);
}

}  // namespace

std::vector<Subspace> ideal_powers(const FinAlgebra& alg, const Subspace& ideal) {
  std::vector<Subspace> out;
  Subspace cur = ideal;
  for (std::size_t step = 0; step <= alg.dim() + 1 && !cur.is_zero(); ++step) {
    out.push_back(cur);
    cur = product_space(alg, cur, ideal);
  }
  return out;
}

Subspace radical(const FinAlgebra& alg) {
  const Subspace rad = trace_form_kernel(alg);
  if (!is_two_sided_ideal(alg, rad)) throw TheoremViolation("radical", "trace-form kernel is not a two-sided ideal");
  const auto powers = ideal_powers(alg, rad);
  if (!rad.is_zero() && !product_space(alg, powers.back(), rad).is_zero()) {
    throw TheoremViolation("radical", "trace-form kernel is not nilpotent");
  }
  if (!rad.is_zero() && !trace_form_kernel(quotient(alg, rad).algebra).is_zero()) {
    throw TheoremViolation("radical", "quotient by the trace-form kernel still has a radical");
  }
  return rad;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Pass: return "pass";
    case Tri::Fail: return "fail";
    case Tri::Undecided: return "undecided";
  }
  return "undecided";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("TRIALG_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw Error(ErrorKind::InvalidArgument, std::string("TRIALG_BUDGET is not a number: ") + env);
  }
  return 1000000;
}

std::vector<Vec> enumerate_elements(const FinAlgebra& alg, std::uint64_t budget) {
  const Field f = alg.field();
  if (f.is_rational()) throw Error(ErrorKind::InvalidArgument, "cannot enumerate a rational algebra");
  const std::uint64_t p = f.characteristic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (count > budget / p) {
      throw Error(ErrorKind::BudgetExceeded, std::to_string(p) + "^" + std::to_string(alg.dim()) + " elements exceed budget " + std::to_string(budget));
    }
    count *= p;
  }
  if (count > budget) throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " elements exceed budget " + std::to_string(budget));
  std::vector<Vec> out;
  out.reserve(count);
  std::vector<std::uint64_t> digits(alg.dim(), 0);
  for (std::uint64_t n = 0; n < count; ++n) {
    Vec v;
    v.reserve(alg.dim());
    for (auto d : digits) v.push_back(Scalar::from_int(f, static_cast<long>(d)));
    out.push_back(std::move(v));
    for (std::size_t i = alg.dim(); i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

namespace {

bool corner_vanishes(const FinAlgebra& alg, const Vec& left, const Vec& right) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!is_zero(alg.mul(alg.mul(left, alg.basis_vec(i)), right))) return false;
  }
  return true;
}

// e A (1-e) = 0 must force (1-e) A e = 0
bool condition_i_holds_at(const FinAlgebra& alg, const Vec& e) {
  const Vec rest = alg.unit() - e;
  return !corner_vanishes(alg, e, rest) || corner_vanishes(alg, rest, e);
}

bool is_central(const FinAlgebra& alg, const Vec& x) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!is_zero(alg.commutator(x, alg.basis_vec(i)))) return false;
  }
  return true;
}

// nonzero a with a A a = 0 taken from the last nonzero power of the radical
std::optional<Vec> degenerate_witness(const FinAlgebra& alg, const Subspace& rad) {
  if (rad.is_zero()) return std::nullopt;
  return ideal_powers(alg, rad).back().basis().front();
}

}  // namespace

StructureReport structure_checks(const FinAlgebra& alg, StructureMode mode, std::uint64_t budget) {
  StructureReport rep;
  switch (mode) {
    case StructureMode::ConditionI: rep.mode = "condition_I"; break;
    case StructureMode::Nondegenerate: rep.mode = "nondegenerate"; break;
    case StructureMode::Idempotents: rep.mode = "idempotents"; break;
    case StructureMode::CentralIdempotents: rep.mode = "central_idempotents"; break;
  }
  const Field f = alg.field();
  const bool radical_ok = f.is_rational() || f.characteristic() > alg.dim();

  if (f.is_rational()) {
    if (mode == StructureMode::Nondegenerate) {
      const Subspace rad = radical(alg);
      rep.method = "radical";
      if (auto w = degenerate_witness(alg, rad)) {
        rep.verdict = Tri::Fail;
        rep.witnesses.push_back(*w);
      } else {
        rep.verdict = Tri::Pass;
      }
      return rep;
    }
    if (mode == StructureMode::ConditionI) {
      if (alg.is_commutative()) {
        rep.verdict = Tri::Pass;
        rep.method = "commutative";
      } else if (radical(alg).is_zero()) {
        rep.verdict = Tri::Pass;
        rep.method = "nondegenerate";
      } else {
        rep.method = "sufficient criteria only";
        rep.note = "idempotents are not enumerated over Q";
      }
      return rep;
    }
    rep.method = "none";
    rep.note = "idempotents are not enumerated over Q";
    return rep;
  }

  const auto elements = enumerate_elements(alg, budget);
  rep.method = "exhaustive";
  bool all_central = true;
  for (const auto& e : elements) {
    if (alg.mul(e, e) != e) continue;
    rep.idempotents.push_back(e);
    if (!is_central(alg, e)) all_central = false;
  }

  if (mode == StructureMode::Nondegenerate) {
    rep.verdict = Tri::Pass;
    for (const auto& a : elements) {
      if (!is_zero(a) && corner_vanishes(alg, a, a)) {
        rep.verdict = Tri::Fail;
        rep.witnesses.push_back(a);
        break;
      }
    }
    if (radical_ok) {
      const bool rad_zero = radical(alg).is_zero();
      if (rad_zero != (rep.verdict == Tri::Pass)) {
        throw TheoremViolation("nondegenerate", "exhaustive search disagrees with the radical criterion");
      }
    }
    return rep;
  }

  if (mode == StructureMode::Idempotents) {
    rep.verdict = Tri::Pass;
    return rep;
  }
  if (mode == StructureMode::CentralIdempotents) {
    rep.verdict = all_central ? Tri::Pass : Tri::Fail;
    for (const auto& e : rep.idempotents) {
      if (!is_central(alg, e)) {
        rep.witnesses.push_back(e);
        break;
      }
    }
    if (alg.is_commutative() && !all_central) {
      throw TheoremViolation("central_idempotents", "commutative algebra with a non-central idempotent");
    }
    return rep;
  }

  rep.verdict = Tri::Pass;
  for (const auto& e : rep.idempotents) {
    if (!condition_i_holds_at(alg, e)) {
      rep.verdict = Tri::Fail;
      rep.witnesses.push_back(e);
      break;
    }
  }
  if (alg.is_commutative() && !all_central) {
    throw TheoremViolation("condition_I", "commutative algebra with a non-central idempotent");
  }
  if (all_central && rep.verdict == Tri::Fail) {
    throw TheoremViolation("condition_I", "all idempotents central yet Condition (I) fails");
  }
  if (radical_ok && radical(alg).is_zero() && rep.verdict == Tri::Fail) {
    throw TheoremViolation("condition_I", "non-degenerate algebra fails Condition (I)");
  }
  return rep;
}

}  // namespace trialg
