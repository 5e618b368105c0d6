#include "trialg/fixtures.hpp"

#include "trialg/errors.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace trialg {

FinAlgebra scalar_algebra(Field f, const std::string& name) {
  return FinAlgebra::create(f, {name}, {Vec{Scalar::one(f)}}, Vec{Scalar::one(f)});
}

FinAlgebra diagonal_algebra(Field f, std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<Vec> products;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(i == j ? unit_vec(f, n, i) : zero_vec(f, n));
  Vec unit(n, Scalar::one(f));
  return FinAlgebra::create(f, names, products, unit);
}

namespace {

struct IncidenceBasis {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t index_of(std::size_t i, std::size_t j) const {
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (pairs[t].first == i && pairs[t].second == j) return t;
    return pairs.size();
  }
};

std::string unit_name(std::size_t i, std::size_t j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); }

// pairs (i, j) with i <= j in the poset, i in rows, j in cols, row-major
IncidenceBasis incidence_pairs(const Poset& poset, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  IncidenceBasis b;
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j)
      if (poset.le[i][j]) b.pairs.emplace_back(i, j);
  return b;
}

FinAlgebra incidence_algebra(Field f, const Poset& poset, std::size_t from, std::size_t to) {
  const auto basis = incidence_pairs(poset, from, to, from, to);
  const std::size_t n = basis.pairs.size();
  std::vector<std::string> names;
  std::vector<Vec> products;
  for (auto [i, j] : basis.pairs) names.push_back(unit_name(i, j));
  for (auto [i, j] : basis.pairs)
    for (auto [k, l] : basis.pairs) products.push_back(j == k ? unit_vec(f, n, basis.index_of(i, l)) : zero_vec(f, n));
  Vec unit = zero_vec(f, n);
  for (std::size_t i = from; i < to; ++i) unit[basis.index_of(i, i)] = Scalar::one(f);
  return FinAlgebra::create(f, names, products, unit);
}

}  // namespace

FinAlgebra upper_triangular(Field f, std::size_t n) { return incidence_algebra(f, chain(n), 0, n); }

FinAlgebra truncated_poly(Field f, std::size_t n) {
  std::vector<std::string> names;
  std::vector<Vec> products;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(i + j < n ? unit_vec(f, n, i + j) : zero_vec(f, n));
  return FinAlgebra::create(f, names, products, unit_vec(f, n, 0));
}

Bimodule regular_bimodule(const FinAlgebra& alg) {
  Bimodule m;
  m.field = alg.field();
  m.dim_a = m.dim_m = m.dim_b = alg.dim();
  for (const auto& s : alg.names()) m.names.push_back("m" + s);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) m.left.push_back(alg.product(i, j));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) m.right.push_back(alg.product(i, j));
  return m;
}

Poset chain(std::size_t n) {
  Poset p;
  p.n = n;
  p.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p.le[i][j] = true;
  return p;
}

TriAlgebra incidence_triangular(Field f, const Poset& poset, std::size_t k, bool allow_zero_m) {
  const std::size_t n = poset.n;
  if (k == 0 || k >= n) throw Error(ErrorKind::InvalidArgument, "split point must lie strictly inside the poset");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (poset.le[i][j]) throw Error(ErrorKind::InvalidArgument, "poset is not compatible with the index order");
  FinAlgebra a = incidence_algebra(f, poset, 0, k);
  FinAlgebra b = incidence_algebra(f, poset, k, n);
  const auto ab = incidence_pairs(poset, 0, k, 0, k);
  const auto bb = incidence_pairs(poset, k, n, k, n);
  const auto mb = incidence_pairs(poset, 0, k, k, n);
  Bimodule m;
  m.field = f;
  m.dim_a = ab.pairs.size();
  m.dim_b = bb.pairs.size();
  m.dim_m = mb.pairs.size();
  for (auto [i, j] : mb.pairs) m.names.push_back(unit_name(i, j));
  for (auto [i, j] : ab.pairs)
    for (auto [r, s] : mb.pairs) m.left.push_back(j == r ? unit_vec(f, m.dim_m, mb.index_of(i, s)) : zero_vec(f, m.dim_m));
  for (auto [r, s] : mb.pairs)
    for (auto [i, j] : bb.pairs) m.right.push_back(s == i ? unit_vec(f, m.dim_m, mb.index_of(r, j)) : zero_vec(f, m.dim_m));
  return build_triangular(std::move(a), std::move(m), std::move(b), allow_zero_m);
}

TriAlgebra fixture_f1() {
  const Field q = Field::rational();
  TriAlgebra t = incidence_triangular(q, chain(2), 1);
  // rename to p, m, q
  Bimodule m = t.M();
  m.names = {"m"};
  return build_triangular(scalar_algebra(q, "p"), m, scalar_algebra(q, "q"));
}

FinAlgebra fixture_f2() { return truncated_poly(Field::rational(), 4); }

TriAlgebra fixture_f3(Field f) { return incidence_triangular(f, chain(3), 2); }

TriAlgebra fixture_f4() { return fixture_f3(Field::prime(5)); }

namespace {

LinMap diag_map(Field f, const std::vector<long>& d) {
  LinMap m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = Scalar::from_int(f, d[i]);
  return m;
}

}  // namespace

LinMap sigma1() { return diag_map(Field::rational(), {1, -1, 1}); }
LinMap theta1() { return diag_map(Field::rational(), {1, 1, -1}); }

Vec lambda1() {
  const Field q = Field::rational();
  return Vec{Scalar::one(q), Scalar::zero(q), Scalar::from_int(q, -1)};
}

LinMap sigma2(Field f) { return diag_map(f, {1, -1, 1, -1}); }

std::optional<Vec> algebra_inverse(const FinAlgebra& alg, const Vec& z) {
  // z w = 1 has a unique solution iff z is invertible (finite dimension)
  auto w = solve_linear(alg.left_mult(z), alg.unit());
  if (!w || alg.mul(*w, z) != alg.unit()) return std::nullopt;
  return w;
}

LinMap inner_automorphism(const FinAlgebra& alg, const Vec& z) {
  const auto zinv = algebra_inverse(alg, z);
  if (!zinv) throw Error(ErrorKind::InvalidArgument, "conjugating element is not invertible");
  LinMap m(alg.field(), alg.dim(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) m.set_col(j, alg.mul(alg.mul(*zinv, alg.basis_vec(j)), z));
  return m;
}

LinMap diagonal_conjugation(const TriAlgebra& t, const Poset& poset, std::size_t k, const std::vector<Scalar>& d) {
  const Field f = t.field();
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (auto [r0, r1, c0, c1] : {std::array<std::size_t, 4>{0, k, 0, k}, std::array<std::size_t, 4>{0, k, k, poset.n},
                                std::array<std::size_t, 4>{k, poset.n, k, poset.n}}) {
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j)
        if (poset.le[i][j]) order.emplace_back(i, j);
  }
  if (order.size() != t.dim()) throw Error(ErrorKind::ShapeMismatch, "poset does not match the algebra");
  LinMap m(f, t.dim(), t.dim());
  for (std::size_t s = 0; s < order.size(); ++s) m.at(s, s) = d[order[s].second] / d[order[s].first];
  return m;
}

namespace {

// Trian(F[x]/(x^2), F[x]/(x^2), F) with x -> c x on A and nu = s f_sigma
RandomInstance dual_number_instance(Field f, const Scalar& c, const Scalar& s) {
  FinAlgebra a = truncated_poly(f, 2);
  FinAlgebra b = scalar_algebra(f, "y");
  Bimodule m;
  m.field = f;
  m.dim_a = 2;
  m.dim_m = 2;
  m.dim_b = 1;
  m.names = {"m1", "mx"};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.left.push_back(a.product(i, j));
  for (std::size_t j = 0; j < 2; ++j) m.right.push_back(unit_vec(f, 2, j));
  RandomInstance inst;
  inst.label = "dual(c=" + c.to_string() + ",s=" + s.to_string() + ")";
  inst.t = build_triangular(a, m, b);
  LinMap sg(f, 5, 5);
  sg.at(0, 0) = Scalar::one(f);
  sg.at(1, 1) = c;
  sg.at(2, 2) = s;
  sg.at(3, 3) = s * c;
  sg.at(4, 4) = Scalar::one(f);
  inst.sigma = sg;
  return inst;
}

}  // namespace

std::vector<RandomInstance> random_instances(Field f, std::size_t count, std::uint64_t seed, std::size_t max_dim,
                                             bool faithful_only) {
  if (f.is_rational()) throw Error(ErrorKind::InvalidArgument, "random instances are generated over F_p");
  const std::uint64_t p = f.characteristic();
  std::mt19937_64 rng(seed);
  auto nonzero = [&] { return Scalar::from_int(f, static_cast<long>(1 + rng() % (p - 1))); };
  std::vector<RandomInstance> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 10000) {
    ++attempts;
    if (rng() % 5 == 0) {
      auto inst = dual_number_instance(f, nonzero(), nonzero());
      if (inst.t.dim() <= max_dim) out.push_back(std::move(inst));
      continue;
    }
    Poset poset;
    poset.n = 2 + rng() % 3;
    poset.le.assign(poset.n, std::vector<bool>(poset.n, false));
    for (std::size_t i = 0; i < poset.n; ++i) poset.le[i][i] = true;
    for (std::size_t i = 0; i < poset.n; ++i)
      for (std::size_t j = i + 1; j < poset.n; ++j) poset.le[i][j] = rng() % 2 == 0;
    for (std::size_t k = 0; k < poset.n; ++k)
      for (std::size_t i = 0; i < poset.n; ++i)
        for (std::size_t j = 0; j < poset.n; ++j)
          if (poset.le[i][k] && poset.le[k][j]) poset.le[i][j] = true;
    const std::size_t k = 1 + rng() % (poset.n - 1);
    std::size_t dim = 0, dm = 0;
    for (std::size_t i = 0; i < poset.n; ++i)
      for (std::size_t j = 0; j < poset.n; ++j) {
        if (!poset.le[i][j]) continue;
        ++dim;
        if (i < k && j >= k) ++dm;
      }
    if (dim > max_dim || dm == 0) continue;
    RandomInstance inst;
    inst.t = incidence_triangular(f, poset, k);
    if (faithful_only && !inst.t.faithful()) continue;
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < poset.n; ++i) d.push_back(nonzero());
    inst.sigma = diagonal_conjugation(inst.t, poset, k, d);
    inst.label = "poset(n=" + std::to_string(poset.n) + ",k=" + std::to_string(k) + ",dim=" + std::to_string(dim) + ")#" +
                 std::to_string(out.size());
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace trialg
