#include "trialg/classify.hpp"
#include "trialg/fixtures.hpp"

#include "test_util.hpp"

using namespace trialg;
using testutil::iv;
using testutil::kind_of;

namespace {

const Field Q = Field::rational();

LinMap from_cols(Field f, std::size_t n, const std::vector<std::vector<long>>& cols) {
  std::vector<Vec> v;
  for (const auto& c : cols) v.push_back(iv(f, c));
  return Mat::from_columns(f, n, v);
}

// Trian(Q u1 + Q u2, Q m, Q v1 + Q v2) with u1 m = m = m v1 and u2, v2 acting
// as zero: F1 plus a two-dimensional diagonal summand.
TriAlgebra f1_plus_diagonal() {
  Bimodule m{Q, 2, 1, 2, {"m"}, {iv(Q, {1}), iv(Q, {0})}, {iv(Q, {1}), iv(Q, {0})}};
  return build_triangular(diagonal_algebra(Q, 2, "u"), m, diagonal_algebra(Q, 2, "v"));
}

// Trian(Q u1 + Q u2, Q m, Q) with u1 M = 0.
TriAlgebra dead_factor() {
  Bimodule m{Q, 2, 1, 1, {"m"}, {iv(Q, {0}), iv(Q, {1})}, {iv(Q, {1})}};
  return build_triangular(diagonal_algebra(Q, 2, "u"), m, scalar_algebra(Q, "q"));
}

// Q^4 as the diagonal triangular algebra Trian(Q^2, 0, Q^2).
TriAlgebra diagonal4() {
  Bimodule m{Q, 2, 0, 2, {}, {}, {}};
  return build_triangular(diagonal_algebra(Q, 2, "u"), m, diagonal_algebra(Q, 2, "v"), true);
}

// Endomorphism of Q^4 sending e_i to the sum of e_j with target[j] = i.
LinMap idempotent_map(const std::vector<std::size_t>& target) {
  LinMap m(Q, 4, 4);
  for (std::size_t j = 0; j < 4; ++j) m.at(j, target[j]) = Scalar::one(Q);
  return m;
}

Subspace subspace_of_pp_zero(const TriAlgebra& t, const MapSpace& s) {
  // coordinates c with (sum c_k D_k)(p, p) = 0
  const auto basis = s.bilinear_basis();
  Mat sys(t.field(), t.dim(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vec v = basis[k].apply(t.p(), t.p());
    for (std::size_t r = 0; r < t.dim(); ++r) sys.at(r, k) = v[r];
  }
  std::vector<Vec> gens;
  const Subspace sol = kernel_basis(sys);
  for (const auto& c : sol.basis()) {
    Vec flat = zero_vec(t.field(), s.space.ambient_dim());
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(flat, c[k], s.space.basis()[k]);
    gens.push_back(flat);
  }
  return Subspace::span(t.field(), s.space.ambient_dim(), gens);
}

}  // namespace

TEST(Classify, ExtremalSplitExamples) {
  const TriAlgebra f1 = fixture_f1();
  const FinAlgebra& T = f1.total();
  const BilinMap psi_m = psi_extremal(T, iv(Q, {0, 1, 0}), sigma1());
  ExtremalSplit s = extremal_split(f1, sigma1(), psi_m);
  EXPECT_EQ(s.x0, iv(Q, {0, 1, 0}));
  EXPECT_EQ(s.psi, psi_m);
  EXPECT_TRUE(s.d0.is_zero());

  const BilinMap inner = Delta_inner(T, lambda1(), sigma1());
  s = extremal_split(f1, sigma1(), inner);
  EXPECT_TRUE(s.psi.is_zero());
  EXPECT_EQ(s.d0, inner);

  EXPECT_EQ(kind_of([&] { extremal_split(f1, sigma1(), BilinMap::from_values(Q, 3, std::vector<Vec>(9, iv(Q, {1, 0, 0})))); }),
            ErrorKind::NotSigmaBiderivation);
}

TEST(Classify, ExtremalSplitOverSolvedSpaces) {
  const Field f5 = Field::prime(5);
  const TriAlgebra f4 = fixture_f4();
  const TriAlgebra f1 = fixture_f1();
  std::vector<std::pair<const TriAlgebra*, LinMap>> cases = {
      {&f1, sigma1()}, {&f4, Mat::identity(f5, 6)}, {&f4, diagonal_conjugation(f4, chain(3), 2, {Scalar::from_int(f5, 1), Scalar::from_int(f5, 2), Scalar::from_int(f5, 3)})}};
  for (const auto& [t, sigma] : cases) {
    const MapSpace s = solve_space(t->total(), SpaceKind::SigmaBiderivation, sigma);
    ASSERT_GT(s.dim(), 0u);
    bool saw_nonzero = false;
    for (const auto& d : s.bilinear_basis()) {
      const ExtremalSplit sp = extremal_split(*t, sigma, d);
      EXPECT_TRUE(is_zero(sp.d0.apply(t->p(), t->p())));
      EXPECT_EQ(sp.psi + sp.d0, d);
      saw_nonzero |= !is_zero(sp.x0);
      check_biderivation_identities(*t, sigma, d);
    }
    EXPECT_TRUE(saw_nonzero);
  }
}

TEST(Classify, InnerWitness) {
  const TriAlgebra f1 = fixture_f1();
  const BilinMap inner = Delta_inner(f1.total(), lambda1(), sigma1());
  auto w = inner_biderivation_witness(f1, sigma1(), inner);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, lambda1());
  w = inner_biderivation_witness(f1, sigma1(), BilinMap::zero(Q, 3));
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_zero(*w));
  EXPECT_EQ(kind_of([&] { inner_biderivation_witness(f1, sigma1(), psi_extremal(f1.total(), iv(Q, {0, 1, 0}), sigma1())); }),
            ErrorKind::PreconditionFails);
}

TEST(Classify, InnercondOnF3) {
  const TriAlgebra f3 = fixture_f3();
  const LinMap id = Mat::identity(Q, 6);
  const Report rep = innercond_hypotheses(f3, block_decompose(f3, id));
  ASSERT_EQ(rep.hypotheses.size(), 4u);
  for (const auto& c : rep.hypotheses) EXPECT_EQ(c.status, Tri::Pass) << c.name << ": " << c.evidence;
  EXPECT_EQ(rep.verdict, "applicable");

  const MapSpace s = solve_space(f3.total(), SpaceKind::SigmaBiderivation, id);
  const Subspace pp0 = subspace_of_pp_zero(f3, s);
  ASSERT_GT(pp0.dim(), 0u);
  for (const auto& v : pp0.basis()) {
    const BilinMap d = BilinMap::unflatten(Q, 6, v);
    const auto w = inner_biderivation_witness(f3, id, d);
    ASSERT_TRUE(w);
    EXPECT_EQ(Delta_inner(f3.total(), *w, id), d);
    const Vec la = f3.part_a(*w);
    for (std::size_t j = 0; j < f3.dim_m(); ++j) {
      const Vec m = unit_vec(Q, 2, j);
      EXPECT_EQ(d.apply(f3.p(), f3.embed_m(m)), f3.embed_m(f3.act_left(la, m)));
    }
  }
  // every solved basis element, after removing its extremal part
  for (const auto& d : s.bilinear_basis()) EXPECT_TRUE(inner_biderivation_witness(f3, id, extremal_split(f3, id, d).d0));
}

TEST(Classify, InnercondOnF1) {
  const TriAlgebra f1 = fixture_f1();
  const Report rep = innercond_hypotheses(f1, block_decompose(f1, sigma1()));
  EXPECT_EQ(rep.find("(ii)")->status, Tri::Fail);
  EXPECT_EQ(rep.verdict, "not_applicable");
  const Report f4rep = innercond_hypotheses(fixture_f4(), block_decompose(fixture_f4(), Mat::identity(Field::prime(5), 6)));
  EXPECT_EQ(f4rep.find("(iii)")->status, Tri::Pass);
}

TEST(Classify, CommutingBlocksExamples) {
  const TriAlgebra f1 = fixture_f1();
  const AutBlocks sb = block_decompose(f1, sigma1());
  const CommutingBlocks cb = commuting_blocks(f1, sb, theta1());
  EXPECT_EQ(cb.delta1, Mat::identity(Q, 1));
  EXPECT_EQ(cb.mu3, from_cols(Q, 1, {{-1}}));
  EXPECT_TRUE(cb.delta2.is_zero() && cb.delta3.is_zero() && cb.mu1.is_zero() && cb.mu2.is_zero());
  EXPECT_EQ(left_multiplication(f1.total(), lambda1()), theta1());

  const TriAlgebra f3 = fixture_f3();
  const LinMap id = Mat::identity(Q, 6);
  const CommutingBlocks ci = commuting_blocks(f3, block_decompose(f3, id), id);
  EXPECT_EQ(ci.delta1, Mat::identity(Q, 3));
  EXPECT_EQ(ci.mu3, Mat::identity(Q, 1));
  EXPECT_TRUE(ci.delta2.is_zero() && ci.delta3.is_zero() && ci.mu1.is_zero() && ci.mu2.is_zero());

  EXPECT_EQ(kind_of([&] { commuting_blocks(f1, sb, Mat::identity(Q, 3)); }), ErrorKind::NotSigmaCommuting);
}

TEST(Classify, ProperWitnessTheta1) {
  const TriAlgebra f1 = fixture_f1();
  const AutBlocks sb = block_decompose(f1, sigma1());
  Properness pr = properness(f1, sb, theta1());
  EXPECT_TRUE(pr.criterion_ii && pr.criterion_iii && pr.direct);
  ASSERT_TRUE(pr.witness);
  EXPECT_EQ(pr.witness->lambda, lambda1());
  EXPECT_TRUE(pr.witness->omega.is_zero());

  // a sigma-central-valued map: x -> (p-coordinate of x) lambda1
  LinMap omega0(Q, 3, 3);
  omega0.set_col(0, lambda1());
  pr = properness(f1, sb, omega0);
  ASSERT_TRUE(pr.witness);
  EXPECT_TRUE(is_zero(pr.witness->lambda));
  EXPECT_EQ(pr.witness->omega, omega0);
}

TEST(Classify, ProperHeadsAgreeOnSolvedSpaces) {
  const Field f5 = Field::prime(5);
  const TriAlgebra f1 = fixture_f1();
  const TriAlgebra f4 = fixture_f4();
  std::vector<std::pair<const TriAlgebra*, LinMap>> cases = {
      {&f1, sigma1()}, {&f1, Mat::identity(Q, 3)}, {&f4, Mat::identity(f5, 6)},
      {&f4, diagonal_conjugation(f4, chain(3), 2, {Scalar::from_int(f5, 1), Scalar::from_int(f5, 4), Scalar::from_int(f5, 2)})}};
  for (const auto& [t, sigma] : cases) {
    const AutBlocks sb = block_decompose(*t, sigma);
    const MapSpace s = solve_space(t->total(), SpaceKind::SigmaCommuting, sigma);
    for (const auto& theta : s.linear_basis()) {
      const Properness pr = properness(*t, sb, theta);
      EXPECT_EQ(pr.criterion_ii, pr.criterion_iii);
      EXPECT_EQ(pr.direct, pr.criterion_iii);
      if (pr.witness) {
        EXPECT_EQ(left_multiplication(t->total(), pr.witness->lambda) + pr.witness->omega, theta);
      }
    }
    const Report cc = caractcomm_hypotheses(*t, sb);
    if (cc.all_pass())
      for (const auto& theta : s.linear_basis()) EXPECT_TRUE(properness(*t, sb, theta).witness);
  }
}

TEST(Classify, CaractcommF1) {
  const TriAlgebra f1 = fixture_f1();
  const Report rep = caractcomm_hypotheses(f1, block_decompose(f1, sigma1()));
  EXPECT_EQ(rep.find("(iii)")->status, Tri::Pass);
  ASSERT_EQ(rep.witnesses.size(), 1u);
  EXPECT_EQ(rep.witnesses[0].value, iv(Q, {1}));
  // B = Q is commutative, so (i) needs the Z-equality branch
  EXPECT_EQ(rep.find("(i)")->status, Tri::Pass);
  EXPECT_NE(rep.find("(i)")->evidence.find("B = [B,B]: no"), std::string::npos);
}

TEST(Classify, RandomInstancesCommutingAndLemaux) {
  const Field f5 = Field::prime(5);
  std::size_t proper_runs = 0;
  for (const auto& inst : random_instances(f5, 20, 77)) {
    const AutBlocks sb = block_decompose(inst.t, inst.sigma);
    const MapSpace s = solve_space(inst.t.total(), SpaceKind::SigmaCommuting, inst.sigma);
    for (const auto& theta : s.linear_basis()) {
      const CommutingBlocks cb = commuting_blocks(inst.t, sb, theta);
      EXPECT_EQ(reassemble(inst.t, cb, sb), theta) << inst.label;
      if (inst.t.faithful()) {
        properness(inst.t, sb, theta);
        ++proper_runs;
      }
    }
  }
  EXPECT_GT(proper_runs, 0u);
}

TEST(Classify, EndoBlocksExamples) {
  const TriAlgebra f3 = fixture_f3();
  EndoAnalysis ea = endo_blocks(f3, Mat::identity(Q, 6));
  EXPECT_EQ(ea.blocks.chi1, Mat::identity(Q, 3));
  EXPECT_EQ(ea.blocks.gamma1, Mat::identity(Q, 1));
  EXPECT_EQ(ea.blocks.h, Mat::identity(Q, 2));
  EXPECT_TRUE(ea.blocks.chi2.is_zero() && ea.blocks.chi3.is_zero() && ea.blocks.gamma2.is_zero() && ea.blocks.gamma3.is_zero());
  for (const auto& c : ea.report.hypotheses) EXPECT_EQ(c.status, Tri::Pass) << c.name;

  const TriAlgebra f1 = fixture_f1();
  ea = endo_blocks(f1, sigma1());
  EXPECT_EQ(ea.blocks.chi1, Mat::identity(Q, 1));
  EXPECT_EQ(ea.blocks.gamma1, Mat::identity(Q, 1));
  EXPECT_EQ(ea.blocks.h, from_cols(Q, 1, {{-1}}));

  // phi_{1+m} sigma1 and its normalization
  const LinMap composite = inner_automorphism(f1.total(), iv(Q, {1, 1, 1})) * sigma1();
  ea = endo_blocks(f1, composite);
  EXPECT_EQ(ea.blocks.chi2, from_cols(Q, 1, {{1}}));
  EXPECT_EQ(ea.blocks.gamma2, from_cols(Q, 1, {{-1}}));
  const auto w = partible_witness(f1, composite);
  ASSERT_TRUE(w);
  ea = endo_blocks(f1, w->sigma_bar);
  EXPECT_TRUE(ea.blocks.chi2.is_zero());

  // anti-partible swap on a diagonal algebra
  ea = endo_blocks(diagonal4(), idempotent_map({2, 3, 0, 1}));
  EXPECT_TRUE(ea.anti_partible);
  EXPECT_EQ(ea.report.verdict, "anti_partible");

  EXPECT_EQ(kind_of([&] { endo_blocks(f1, theta1()); }), ErrorKind::NotEndomorphism);
}

TEST(Classify, Thm0NeedsBijectivity) {
  // u1 -> 0, u2 -> u1 + u2: M-preserving, not injective, Im chi1 = Q 1_A
  const TriAlgebra t = dead_factor();
  const LinMap phi = from_cols(Q, 4, {{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const EndoAnalysis ea = endo_blocks(t, phi);
  EXPECT_TRUE(ea.m_preserving);
  EXPECT_FALSE(ea.bijective);
  const Subspace im = image(ea.blocks.chi1);
  EXPECT_EQ(im.dim(), 1u);
  EXPECT_FALSE(is_two_sided_ideal(t.A(), im));
  const MonoEpi me = endo_mono_epi(t, ea);
  EXPECT_TRUE(me.m1);
  EXPECT_FALSE(me.m2);
  EXPECT_FALSE(me.mono || me.epi);
  EXPECT_TRUE(me.e1);
  EXPECT_FALSE(me.e2_sum);
}

TEST(Classify, MonoEpiAgainstRank) {
  const TriAlgebra f1 = fixture_f1();
  const TriAlgebra f3 = fixture_f3();
  const TriAlgebra d4 = diagonal4();
  const TriAlgebra fd = f1_plus_diagonal();
  struct Case {
    const TriAlgebra* t;
    LinMap phi;
    bool iso;
  };
  std::vector<Case> cases = {
      {&f1, Mat::identity(Q, 3), true},
      {&f1, sigma1(), true},
      {&f1, from_cols(Q, 3, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), false},  // a + m + b -> a + b
      {&f1, inner_automorphism(f1.total(), iv(Q, {1, 2, 1})), true},
      {&f1, inner_automorphism(f1.total(), iv(Q, {1, 1, 1})) * sigma1(), true},
      {&f3, Mat::identity(Q, 6), true},
      {&f3, inner_automorphism(f3.total(), iv(Q, {1, 1, 1, 0, 1, 1})), true},
      {&d4, idempotent_map({2, 3, 0, 1}), true},
      {&d4, idempotent_map({0, 0, 2, 3}), false},
      {&d4, idempotent_map({1, 0, 3, 2}), true},
      {&d4, idempotent_map({3, 3, 3, 3}), false},
      {&fd, from_cols(Q, 5, {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}}), true},
  };
  std::size_t failing = 0;
  for (const auto& c : cases) {
    const EndoAnalysis ea = endo_blocks(*c.t, c.phi);
    ASSERT_TRUE(ea.m_preserving);
    const MonoEpi me = endo_mono_epi(*c.t, ea);
    EXPECT_EQ(me.mono, c.iso);
    EXPECT_EQ(me.epi, c.iso);
    EXPECT_EQ(me.rank_injective, c.iso);
    failing += !c.iso;
  }
  EXPECT_GE(cases.size(), 10u);
  EXPECT_GE(failing, 2u);
  // the literal intersection reading already fails for the identity
  const MonoEpi id = endo_mono_epi(f1, endo_blocks(f1, Mat::identity(Q, 3)));
  EXPECT_TRUE(id.epi);
  EXPECT_FALSE(id.e2_literal);
}

TEST(Classify, IdealSplit) {
  const TriAlgebra f1 = fixture_f1();
  IdealSplit s = ideal_split(f1, sigma1());
  EXPECT_EQ(s.i, Subspace::full(Q, 3));
  EXPECT_TRUE(s.j.is_zero());
  ASSERT_TRUE(s.phi_i);
  EXPECT_EQ(*s.phi_i, sigma1());

  const TriAlgebra f3 = fixture_f3();
  s = ideal_split(f3, Mat::identity(Q, 6));
  EXPECT_EQ(s.i.dim(), 6u);
  EXPECT_TRUE(s.j.is_zero());

  // F1 (+) Q u2 (+) Q v2 with u2 <-> v2 swapped
  const TriAlgebra fd = f1_plus_diagonal();
  const LinMap swap = from_cols(Q, 5, {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}});
  s = ideal_split(fd, swap);
  EXPECT_EQ(s.i, Subspace::span(Q, 5, {iv(Q, {1, 0, 0, 0, 0}), iv(Q, {0, 0, 1, 0, 0}), iv(Q, {0, 0, 0, 1, 0})}));
  EXPECT_EQ(s.j, Subspace::span(Q, 5, {iv(Q, {0, 1, 0, 0, 0}), iv(Q, {0, 0, 0, 0, 1})}));
  ASSERT_TRUE(s.j_algebra && s.phi_j);
  EXPECT_EQ(*s.phi_j, from_cols(Q, 2, {{0, 1}, {1, 0}}));
  s = ideal_split(fd, Mat::identity(Q, 5));
  EXPECT_TRUE(s.j.is_zero());
  EXPECT_EQ(s.i.dim(), 5u);

  const LinMap inner = inner_automorphism(f1.total(), iv(Q, {1, 3, 1}));
  s = ideal_split(f1, inner);
  EXPECT_EQ(s.i.dim(), 3u);

  EXPECT_EQ(kind_of([&] { ideal_split(f1, from_cols(Q, 3, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}})); }), ErrorKind::NotAutomorphism);
}

TEST(Classify, PartibleWitness) {
  const TriAlgebra f1 = fixture_f1();
  auto w = partible_witness(f1, sigma1());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->z, f1.one());
  EXPECT_EQ(w->sigma_bar, sigma1());

  const TriAlgebra f3 = fixture_f3();
  struct Case {
    const TriAlgebra* t;
    LinMap bar;
  };
  std::vector<Case> bars = {{&f1, Mat::identity(Q, 3)}, {&f1, sigma1()}, {&f3, Mat::identity(Q, 6)},
                            {&f3, diagonal_conjugation(f3, chain(3), 2, {Scalar::from_int(Q, 1), Scalar::from_int(Q, -2), Scalar::from_int(Q, 3)})}};
  for (const auto& c : bars) {
    const TriAlgebra& t = *c.t;
    std::vector<Vec> ms;
    for (std::size_t j = 0; j < t.dim_m(); ++j) {
      ms.push_back(unit_vec(Q, t.dim_m(), j));
      ms.push_back(Scalar::from_int(Q, -3) * unit_vec(Q, t.dim_m(), j));
    }
    if (t.dim_m() == 2) ms.push_back(iv(Q, {1, 1}));
    for (const auto& m : ms) {
      const Vec z = t.one() + t.embed_m(m);
      const LinMap sigma = inner_automorphism(t.total(), z) * c.bar;
      const auto pw = partible_witness(t, sigma);
      ASSERT_TRUE(pw);
      EXPECT_EQ(pw->z, z);
      EXPECT_EQ(pw->sigma_bar, c.bar);
      EXPECT_EQ(inner_automorphism(t.total(), pw->z) * pw->sigma_bar, sigma);
      EXPECT_TRUE(is_block_preserving(t, pw->sigma_bar));
    }
  }
  EXPECT_EQ(kind_of([&] { partible_witness(f1, theta1()); }), ErrorKind::NotAutomorphism);
}

TEST(Classify, ZTransfer) {
  const TriAlgebra f1 = fixture_f1();
  const TriAlgebra f3 = fixture_f3();
  std::vector<std::pair<const TriAlgebra*, LinMap>> cases = {
      {&f1, inner_automorphism(f1.total(), iv(Q, {1, 1, 1})) * sigma1()},
      {&f1, inner_automorphism(f1.total(), iv(Q, {1, -2, 1}))},
      {&f3, inner_automorphism(f3.total(), iv(Q, {1, 0, 1, 2, -1, 1}))}};
  for (const auto& [tp, sigma] : cases) {
    const TriAlgebra& t = *tp;
    const FinAlgebra& T = t.total();
    const auto w = partible_witness(t, sigma);
    ASSERT_TRUE(w);
    for (SpaceKind k : {SpaceKind::SigmaDerivation, SpaceKind::SigmaCommuting}) {
      const MapSpace s = solve_space(T, k, sigma), sb = solve_space(T, k, w->sigma_bar);
      EXPECT_EQ(s.dim(), sb.dim());
      const LinearKind lk = k == SpaceKind::SigmaDerivation ? LinearKind::SigmaDerivation : LinearKind::SigmaCommuting;
      for (const auto& d : s.linear_basis()) EXPECT_TRUE(classify_linear(T, lk, z_transfer(T, w->z, d), w->sigma_bar).holds);
    }
    const MapSpace s = solve_space(T, SpaceKind::SigmaBiderivation, sigma);
    for (const auto& d : s.bilinear_basis())
      EXPECT_TRUE(classify_bilinear(T, BilinearKind::SigmaBiderivation, z_transfer(T, w->z, d), w->sigma_bar).holds);
  }
}

TEST(Classify, CommutingAutomorphisms) {
  const TriAlgebra f1 = fixture_f1();
  CommutingAutoResult r = commuting_auto_check(f1, Mat::identity(Q, 3));
  EXPECT_TRUE(r.identity && r.verdict.holds);
  r = commuting_auto_check(f1, sigma1());
  EXPECT_FALSE(r.verdict.holds);
  EXPECT_FALSE(is_zero(r.verdict.lhs));
  r = commuting_auto_check(f1, inner_automorphism(f1.total(), iv(Q, {1, 1, 1})));
  EXPECT_FALSE(r.verdict.holds);
}

TEST(Classify, PartibilitySufficient) {
  Report r = partibility_sufficient(fixture_f1());
  EXPECT_EQ(r.verdict, "partible");
  r = partibility_sufficient(fixture_f3());
  EXPECT_EQ(r.verdict, "partible");
  EXPECT_EQ(r.find("nil_radical_zero(B)")->status, Tri::Pass);

  const Field f2 = Field::prime(2);
  const FinAlgebra ut2 = upper_triangular(f2, 2);
  const TriAlgebra t = build_triangular(ut2, regular_bimodule(ut2), ut2);
  r = partibility_sufficient(t);
  const Check* ca = r.find("condition_I(A)");
  ASSERT_TRUE(ca);
  EXPECT_NE(ca->status, Tri::Undecided);
}
