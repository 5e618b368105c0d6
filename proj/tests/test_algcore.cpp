#include "trialg/errors.hpp"
#include "trialg/fixtures.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace trialg;

namespace {

const Field Q = Field::rational();

Vec iv(Field f, std::vector<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar::from_int(f, x));
  return v;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

// commutant kernel over the whole algebra
Subspace commutant_oracle(const FinAlgebra& alg) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Mat c = alg.left_mult(alg.basis_vec(i)) - alg.right_mult(alg.basis_vec(i));
    for (std::size_t r = 0; r < alg.dim(); ++r) rows.push_back(c.row(r));
  }
  return kernel_basis(Mat::from_rows(alg.field(), alg.dim(), rows));
}

// Trian(Q x Q, Q, Q) where the first factor of A kills M
TriAlgebra dead_factor_instance() {
  FinAlgebra a = diagonal_algebra(Q, 2);
  Bimodule m;
  m.field = Q;
  m.dim_a = 2;
  m.dim_m = 1;
  m.dim_b = 1;
  m.names = {"m"};
  m.left = {iv(Q, {0}), iv(Q, {1})};
  m.right = {iv(Q, {1})};
  return build_triangular(a, m, scalar_algebra(Q, "q"));
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_NO_THROW(scalar_algebra(Q));
  // dual numbers: e1 unit, e2^2 = 0
  EXPECT_NO_THROW(FinAlgebra::create(Q, {"e1", "e2"}, {iv(Q, {1, 0}), iv(Q, {0, 1}), iv(Q, {0, 1}), iv(Q, {0, 0})}, iv(Q, {1, 0})));
  // e1 e2 = e2 but e2 e1 = 0 with e1 declared as unit
  EXPECT_EQ(kind_of([] {
              FinAlgebra::create(Q, {"e1", "e2"}, {iv(Q, {1, 0}), iv(Q, {0, 1}), iv(Q, {0, 0}), iv(Q, {0, 0})}, iv(Q, {1, 0}));
            }),
            ErrorKind::UnitLawViolation);
}

TEST(Validate, NonAssociative) {
  // a 2-dim table with e2 e2 = e1 + e2 ... break associativity with a twisted product
  auto kind = kind_of([] {
    FinAlgebra::create(Q, {"1", "a", "b"},
                       {iv(Q, {1, 0, 0}), iv(Q, {0, 1, 0}), iv(Q, {0, 0, 1}),  //
                        iv(Q, {0, 1, 0}), iv(Q, {0, 0, 1}), iv(Q, {0, 0, 0}),  //
                        iv(Q, {0, 0, 1}), iv(Q, {0, 1, 0}), iv(Q, {0, 0, 0})},
                       iv(Q, {1, 0, 0}));
  });
  EXPECT_EQ(kind, ErrorKind::NonAssociative);
}

TEST(Triangular, F1Structure) {
  const TriAlgebra t = fixture_f1();
  ASSERT_EQ(t.dim(), 3u);
  const auto& T = t.total();
  const Vec p = t.p(), m = t.embed_m(iv(Q, {1})), q = t.q();
  EXPECT_EQ(T.mul(p, m), m);
  EXPECT_EQ(T.mul(m, q), m);
  EXPECT_TRUE(is_zero(T.mul(m, p)));
  EXPECT_TRUE(is_zero(T.mul(q, m)));
  EXPECT_TRUE(is_zero(T.mul(m, m)));
  EXPECT_EQ(T.mul(p, p), p);
  EXPECT_EQ(T.mul(q, q), q);
  EXPECT_TRUE(is_zero(T.mul(p, q)));
  EXPECT_EQ(p + q, t.one());
  EXPECT_TRUE(t.faithful());
}

TEST(Triangular, F3IsUpperTriangular3) {
  const TriAlgebra t = fixture_f3();
  ASSERT_EQ(t.dim(), 6u);
  // structure constants of matrix units E_ij, i <= j <= 3, listed in the T basis order
  const std::vector<std::pair<int, int>> units = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      Vec expect = zero_vec(Q, 6);
      if (units[x].second == units[y].first) {
        for (std::size_t z = 0; z < 6; ++z)
          if (units[z].first == units[x].first && units[z].second == units[y].second) expect[z] = Scalar::one(Q);
      }
      EXPECT_EQ(t.total().product(x, y), expect) << x << "," << y;
    }
}

TEST(Triangular, Errors) {
  Bimodule bad;
  bad.field = Q;
  bad.dim_a = 1;
  bad.dim_m = 2;
  bad.dim_b = 1;
  bad.names = {"m1", "m2"};
  bad.left = {iv(Q, {1, 0})};  // one entry short
  bad.right = {iv(Q, {1, 0}), iv(Q, {0, 1})};
  EXPECT_EQ(kind_of([&] { build_triangular(scalar_algebra(Q), bad, scalar_algebra(Q)); }), ErrorKind::DimMismatch);
  Bimodule zero;
  zero.field = Q;
  zero.dim_a = 1;
  zero.dim_b = 1;
  zero.dim_m = 0;
  EXPECT_EQ(kind_of([&] { build_triangular(scalar_algebra(Q), zero, scalar_algebra(Q)); }), ErrorKind::ZeroModule);
  EXPECT_NO_THROW(build_triangular(scalar_algebra(Q), zero, scalar_algebra(Q), true));
}

TEST(Center, FormulaMatchesOracle) {
  for (const auto& t : {fixture_f1(), fixture_f3(), fixture_f4()}) {
    const Subspace z = center_T(t);
    EXPECT_EQ(z, commutant_oracle(t.total()));
    EXPECT_EQ(z, Subspace::span(t.field(), t.dim(), {t.one()}));
  }
  for (const auto& inst : random_instances(Field::prime(5), 20, 1234)) {
    EXPECT_EQ(center_T(inst.t), commutant_oracle(inst.t.total())) << inst.label;
  }
}

TEST(Center, RegularTriangular) {
  // Trian(A, A, A): center is {(a, a) : a in Z(A)}
  for (const auto& a : {truncated_poly(Q, 3), upper_triangular(Q, 2), diagonal_algebra(Q, 2)}) {
    const TriAlgebra t = build_triangular(a, regular_bimodule(a), a);
    const Subspace z = center_T(t);
    EXPECT_EQ(z, commutant_oracle(t.total()));
    std::vector<Vec> gens;
    const Subspace za = center(a);
    for (const auto& c : za.basis()) gens.push_back(t.embed_a(c) + t.embed_b(c));
    EXPECT_EQ(z, Subspace::span(Q, t.dim(), gens));
  }
}

TEST(Annihilators, Examples) {
  const TriAlgebra f1 = fixture_f1();
  const auto ann = annihilators(f1);
  EXPECT_TRUE(ann.left_kernel.is_zero());
  EXPECT_TRUE(ann.right_kernel.is_zero());
  EXPECT_EQ(ann.lann_m, Subspace::span(Q, 3, {iv(Q, {0, 1, 0}), iv(Q, {0, 0, 1})}));
  EXPECT_EQ(ann.rann_m, Subspace::span(Q, 3, {iv(Q, {1, 0, 0}), iv(Q, {0, 1, 0})}));

  const auto dead = annihilators(dead_factor_instance());
  EXPECT_EQ(dead.left_kernel, Subspace::span(Q, 2, {iv(Q, {1, 0})}));
  EXPECT_FALSE(dead_factor_instance().faithful());

  const auto f3 = annihilators(fixture_f3());
  EXPECT_TRUE(f3.left_kernel.is_zero());
  EXPECT_TRUE(f3.right_kernel.is_zero());
}

TEST(Tau, Examples) {
  const auto tau1 = tau_iso(fixture_f1());
  EXPECT_EQ(tau1.apply(iv(Q, {1})), iv(Q, {1}));
  const TriAlgebra f3 = fixture_f3();
  const auto tau3 = tau_iso(f3);
  EXPECT_EQ(tau3.domain(), center(f3.A()));
  EXPECT_EQ(tau3.apply(f3.A().unit()), f3.B().unit());
  EXPECT_EQ(tau3.inverse().apply(f3.B().unit()), f3.A().unit());
  EXPECT_EQ(kind_of([] { tau_iso(dead_factor_instance()); }), ErrorKind::NotFaithful);
  for (const auto& inst : random_instances(Field::prime(5), 10, 99, 6, true)) {
    const auto tau = tau_iso(inst.t);
    EXPECT_TRUE(tau.injective());
  }
}

TEST(FaithfulQuotient, Examples) {
  const auto q1 = faithful_quotient(fixture_f1());
  EXPECT_EQ(q1.algebra.total().dim(), 3u);
  const auto qd = faithful_quotient(dead_factor_instance());
  EXPECT_EQ(qd.algebra.dim(), 3u);
  EXPECT_TRUE(qd.algebra.faithful());
  // same structure constants as F1
  EXPECT_EQ(commutant_oracle(qd.algebra.total()).dim(), 1u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(qd.algebra.total().product(i, j), fixture_f1().total().product(i, j));
  for (const auto& inst : random_instances(Field::prime(5), 10, 5)) {
    EXPECT_TRUE(faithful_quotient(inst.t).algebra.faithful()) << inst.label;
  }
}

TEST(Nilpotency, Examples) {
  const TriAlgebra t = fixture_f1();
  auto m = nilpotency_T(t, iv(Q, {0, 1, 0}));
  ASSERT_TRUE(m.index.has_value());
  EXPECT_EQ(*m.index, 2u);
  EXPECT_FALSE(nilpotency_T(t, t.one()).index.has_value());
  auto pm = nilpotency_T(t, iv(Q, {1, 1, 0}));
  EXPECT_FALSE(pm.index.has_value());
  EXPECT_FALSE(pm.a_part_nilpotent);
}

TEST(Nilpotency, ExhaustiveOverF2) {
  const Field f2 = Field::prime(2);
  std::vector<TriAlgebra> cases = {incidence_triangular(f2, chain(2), 1), incidence_triangular(f2, chain(3), 1),
                                   incidence_triangular(f2, chain(3), 2)};
  for (const auto& t : cases) {
    ASSERT_LE(t.dim(), 6u);
    for (const auto& x : enumerate_elements(t.total(), 1u << 20)) EXPECT_NO_THROW(nilpotency_T(t, x));
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(upper_triangular(Q, 2)), Subspace::span(Q, 3, {iv(Q, {0, 1, 0})}));
  EXPECT_TRUE(radical(diagonal_algebra(Q, 2)).is_zero());
  EXPECT_EQ(radical(truncated_poly(Q, 4)), Subspace::span(Q, 4, {iv(Q, {0, 1, 0, 0}), iv(Q, {0, 0, 1, 0}), iv(Q, {0, 0, 0, 1})}));
  EXPECT_EQ(kind_of([] { radical(upper_triangular(Field::prime(2), 2)); }), ErrorKind::CharTooSmall);
  EXPECT_NO_THROW(radical(upper_triangular(Field::prime(5), 2)));
}

TEST(Radical, NilRadicalOfTriangular) {
  EXPECT_EQ(nil_radical_T(fixture_f1()), fixture_f1().block_m());
  const TriAlgebra f3 = fixture_f3();
  const Subspace n3 = nil_radical_T(f3);
  EXPECT_EQ(n3.dim(), 3u);
  // E12, E13, E23 in the T basis order
  EXPECT_EQ(n3, Subspace::span(Q, 6, {unit_vec(Q, 6, 1), unit_vec(Q, 6, 3), unit_vec(Q, 6, 4)}));
  EXPECT_EQ(n3, radical(f3.total()));
}

TEST(Radical, FormulaMatchesDirectOnRandom) {
  const Field f7 = Field::prime(7);
  for (const auto& inst : random_instances(f7, 15, 77)) {
    const Subspace formula = nil_radical_T(inst.t);
    EXPECT_EQ(formula, radical(inst.t.total())) << inst.label;
    for (const auto& v : formula.basis()) EXPECT_TRUE(nilpotency_index(inst.t.total(), v).has_value());
  }
}

TEST(Radical, NilpotentElementsLieInMOverF2) {
  const Field f2 = Field::prime(2);
  const TriAlgebra t = incidence_triangular(f2, chain(2), 1);
  ASSERT_EQ(t.dim(), 3u);
  for (const auto& x : enumerate_elements(t.total(), 1000)) {
    if (nilpotency_index(t.total(), x)) EXPECT_TRUE(t.block_m().contains(x));
  }
}

TEST(StructureChecks, Examples) {
  auto r = structure_checks(scalar_algebra(Q), StructureMode::ConditionI, 1000);
  EXPECT_EQ(r.verdict, Tri::Pass);
  EXPECT_EQ(r.method, "commutative");

  const FinAlgebra ut2 = upper_triangular(Field::prime(2), 2);
  auto ci = structure_checks(ut2, StructureMode::ConditionI, 1000);
  EXPECT_EQ(ci.method, "exhaustive");
  EXPECT_EQ(ci.verdict, Tri::Fail);
  auto nd = structure_checks(ut2, StructureMode::Nondegenerate, 1000);
  EXPECT_EQ(nd.verdict, Tri::Fail);
  ASSERT_FALSE(nd.witnesses.empty());
  EXPECT_EQ(nd.witnesses[0], iv(Field::prime(2), {0, 1, 0}));
  auto ids = structure_checks(ut2, StructureMode::Idempotents, 1000);
  EXPECT_EQ(ids.idempotents.size(), 6u);

  auto semisimple = structure_checks(diagonal_algebra(Q, 2), StructureMode::Nondegenerate, 1000);
  EXPECT_EQ(semisimple.verdict, Tri::Pass);
  EXPECT_EQ(semisimple.method, "radical");

  EXPECT_EQ(kind_of([] { structure_checks(upper_triangular(Field::prime(5), 3), StructureMode::ConditionI, 100); }),
            ErrorKind::BudgetExceeded);
  EXPECT_EQ(structure_checks(upper_triangular(Q, 2), StructureMode::ConditionI, 1000).verdict, Tri::Undecided);
}

TEST(StructureChecks, NondegenerateAgreesWithRadical) {
  const Field f5 = Field::prime(5);
  for (const auto& a : {diagonal_algebra(f5, 2), truncated_poly(f5, 2), upper_triangular(f5, 2)}) {
    EXPECT_NO_THROW(structure_checks(a, StructureMode::Nondegenerate, 1u << 20));
  }
}

TEST(AlgebraOps, QuotientAndSubalgebra) {
  const FinAlgebra ut2 = upper_triangular(Q, 2);
  const auto qt = quotient(ut2, radical(ut2));
  EXPECT_EQ(qt.algebra.dim(), 2u);
  EXPECT_TRUE(qt.algebra.is_commutative());
  EXPECT_EQ(kind_of([&] { quotient(ut2, Subspace::span(Q, 3, {iv(Q, {1, 0, 0})})); }), ErrorKind::NotAnIdeal);
  // corner algebra E11 UT2 E11 has its own unit E11
  const FinAlgebra corner = subalgebra(ut2, Subspace::span(Q, 3, {iv(Q, {1, 0, 0})}));
  EXPECT_EQ(corner.dim(), 1u);
  EXPECT_EQ(corner.unit(), iv(Q, {1}));
}
