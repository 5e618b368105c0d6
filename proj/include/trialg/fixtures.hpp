#pragma once

#include "trialg/maps.hpp"
#include "trialg/triangular.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace trialg {

FinAlgebra scalar_algebra(Field f, const std::string& name = "1");
/// F^n with orthogonal idempotent basis.
FinAlgebra diagonal_algebra(Field f, std::size_t n, const std::string& prefix = "u");
/// Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order.
FinAlgebra upper_triangular(Field f, std::size_t n);
/// F[x]/(x^n), basis 1, x, ..., x^{n-1}.
FinAlgebra truncated_poly(Field f, std::size_t n);

/// A as an (A, A)-bimodule through left and right multiplication.
Bimodule regular_bimodule(const FinAlgebra& alg);

/// Finite poset on {0..n-1} compatible with the natural order.
struct Poset {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;
};
Poset chain(std::size_t n);

/// Incidence algebra of the poset split at k: A on points < k, B on points
/// >= k, M spanned by the E_ij with i < k <= j. Basis order inside each block
/// is row-major in (i, j).
TriAlgebra incidence_triangular(Field f, const Poset& poset, std::size_t k, bool allow_zero_m = false);

/// Trian(Q, Q, Q), basis (p, m, q).
TriAlgebra fixture_f1();
/// Q[x]/(x^4).
FinAlgebra fixture_f2();
/// Trian(UT_2, F^2, F) over the given field.
TriAlgebra fixture_f3(Field f = Field::rational());
/// F3 over F_5.
TriAlgebra fixture_f4();

/// Negates m on F1.
LinMap sigma1();
/// diag(1, 1, -1) on F1.
LinMap theta1();
/// p - q in F1.
Vec lambda1();
/// x -> -x on F[x]/(x^4).
LinMap sigma2(Field f = Field::rational());

/// Inner automorphism x -> z^{-1} x z.
LinMap inner_automorphism(const FinAlgebra& alg, const Vec& z);
std::optional<Vec> algebra_inverse(const FinAlgebra& alg, const Vec& z);

/// Incidence-algebra automorphism E_ij -> (d_j / d_i) E_ij.
LinMap diagonal_conjugation(const TriAlgebra& t, const Poset& poset, std::size_t k, const std::vector<Scalar>& d);

struct RandomInstance {
  std::string label;
  TriAlgebra t;
  LinMap sigma;  // block-preserving automorphism
};

/// Deterministic stream of small triangular algebras over F_p with
/// block-preserving automorphisms: split incidence algebras of random posets
/// and the dual-number family Trian(F[x]/(x^2), F[x]/(x^2), F).
std::vector<RandomInstance> random_instances(Field f, std::size_t count, std::uint64_t seed, std::size_t max_dim = 6,
                                             bool faithful_only = false);

}  // namespace trialg
