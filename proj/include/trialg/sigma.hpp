#pragma once

#include "trialg/maps.hpp"
#include "trialg/triangular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialg {

enum class LinearKind { Endomorphism, Automorphism, Derivation, SigmaDerivation, Commuting, SigmaCommuting };
enum class BilinearKind { Biderivation, SigmaBiderivation };

const char* kind_name(LinearKind k);
const char* kind_name(BilinearKind k);

/// Outcome of a predicate check. On failure `witness` holds the first failing
/// basis indices in lexicographic order and lhs/rhs the two sides there.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;
  /// Element the identity was evaluated at, where that is not a basis vector.
  Vec point;
  Vec lhs;
  Vec rhs;
  std::string note;
};

/// Sigma-kinds need `sigma`; it must be an automorphism (SigmaMissing,
/// SigmaNotAutomorphism). Commuting kinds test Q(x) = [x, f(x)]_sigma on every
/// e_i and on every e_i + e_j (i < j); since Q is quadratic this is exact in
/// every characteristic.
Verdict classify_linear(const FinAlgebra& alg, LinearKind kind, const LinMap& f, const std::optional<LinMap>& sigma = std::nullopt);
/// First slot is scanned over all basis triples before the second slot. A
/// passing sigma-biderivation is additionally checked to vanish on (x, 1) and
/// (1, x).
Verdict classify_bilinear(const FinAlgebra& alg, BilinearKind kind, const BilinMap& d, const std::optional<LinMap>& sigma = std::nullopt);

/// Unital, multiplicative and (for automorphisms) bijective.
bool is_endomorphism(const FinAlgebra& alg, const LinMap& f);
bool is_automorphism(const FinAlgebra& alg, const LinMap& f);

/// sigma(x) y - y x
Vec sigma_commutator(const FinAlgebra& alg, const LinMap& sigma, const Vec& x, const Vec& y);

/// Diagonal blocks of a block-preserving automorphism.
struct AutBlocks {
  LinMap f;   // on A
  LinMap g;   // on B
  LinMap nu;  // on M
};

/// Throws NotAutomorphism, or NotBlockPreserving naming the offending basis
/// image. The block relations are re-verified.
AutBlocks block_decompose(const TriAlgebra& t, const LinMap& sigma);
/// diag(f, nu, g)
LinMap assemble(const TriAlgebra& t, const AutBlocks& blocks);
/// Whether sigma maps each of A, M, B into itself.
bool is_block_preserving(const TriAlgebra& t, const LinMap& sigma);

struct SigmaCenter {
  Subspace z;
  /// eta: pi_B(Z_sigma) -> pi_A(Z_sigma), eta(b) m = nu(m) b; only for faithful T.
  std::optional<PairingMap> eta;
};

/// Z_sigma(T) from the block description {(a, b) : a in Z_f(A), b in Z_g(B),
/// a m = nu(m) b}.
SigmaCenter sigma_center(const TriAlgebra& t, const AutBlocks& blocks);
/// Kernel of lambda -> [e_i, lambda]_sigma over all basis e_i.
Subspace sigma_center_oracle(const FinAlgebra& alg, const LinMap& sigma);

/// (alpha, beta) maps. Derivations: d(xy) = d(x) alpha(y) + beta(x) d(y);
/// commuting: f(x) alpha(x) = beta(x) f(x). sigma-derivations are the
/// (Id, sigma) case.
enum class AlphaBetaKind { Derivation, Commuting };
Verdict classify_alpha_beta(const FinAlgebra& alg, AlphaBetaKind kind, const LinMap& f, const LinMap& alpha, const LinMap& beta);
Verdict classify_alpha_beta_bilinear(const FinAlgebra& alg, const BilinMap& d, const LinMap& alpha, const LinMap& beta);

struct LinearReduction {
  LinMap map;
  LinMap sigma;
};
struct BilinearReduction {
  BilinMap map;
  LinMap sigma;
};

/// alpha^{-1} o f with sigma = alpha^{-1} beta. The equivalence "input is an
/// (alpha, beta)-map iff output is a sigma-map" is re-checked (TheoremViolation).
LinearReduction alpha_beta_reduce(const FinAlgebra& alg, AlphaBetaKind kind, const LinMap& f, const LinMap& alpha, const LinMap& beta);
BilinearReduction alpha_beta_reduce(const FinAlgebra& alg, const BilinMap& d, const LinMap& alpha, const LinMap& beta);

}  // namespace trialg
