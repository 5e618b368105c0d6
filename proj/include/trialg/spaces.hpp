#pragma once

#include "trialg/sigma.hpp"

#include <optional>
#include <vector>

namespace trialg {

enum class SpaceKind { Derivation, SigmaDerivation, Biderivation, SigmaBiderivation, SigmaCommuting };

const char* kind_name(SpaceKind k);
bool is_bilinear(SpaceKind k);
bool needs_sigma(SpaceKind k);

/// Solution space over flattened map coordinates (see flatten / BilinMap::flatten).
struct MapSpace {
  SpaceKind kind = SpaceKind::Derivation;
  std::size_t alg_dim = 0;
  std::optional<LinMap> sigma;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  std::vector<LinMap> linear_basis() const;
  std::vector<BilinMap> bilinear_basis() const;
  bool contains(const LinMap& f) const;
  bool contains(const BilinMap& d) const;
};

/// Largest algebra dimension accepted for bilinear kinds; TRIALG_MAX_BILINEAR_DIM
/// overrides the default of 8.
std::size_t default_bilinear_cap();

/// Kernel of the stacked defining identities. Every basis element is re-checked
/// with classify_linear / classify_bilinear (TheoremViolation on failure).
/// Throws SigmaMissing, SigmaNotAutomorphism, BudgetExceeded.
MapSpace solve_space(const FinAlgebra& alg, SpaceKind kind, const std::optional<LinMap>& sigma = std::nullopt,
                     std::size_t bilinear_cap = default_bilinear_cap());

/// x -> [x, x0]_sigma
LinMap delta_inner(const FinAlgebra& alg, const Vec& x0, const LinMap& sigma);
/// (x, y) -> lambda [x, y]. Throws NotSigmaCentral, CommutativeAlgebra.
BilinMap Delta_inner(const FinAlgebra& alg, const Vec& lambda, const LinMap& sigma);
/// (x, y) -> [x, [y, x0]_sigma]_sigma. Throws CentralElement if x0 is in
/// Z_sigma, PreconditionFails if [[e_i, e_j], x0]_sigma != 0 for a basis pair.
BilinMap psi_extremal(const FinAlgebra& alg, const Vec& x0, const LinMap& sigma);

/// Block form of a sigma-derivation for block-preserving sigma:
/// d(a + m + b) = d_A(a) + (f(a) m_d - m_d b + xi(m)) + d_B(b).
struct HanWeiBlocks {
  LinMap d_a;
  LinMap d_b;
  Vec m_d;
  LinMap xi;
};

/// Throws NotSigmaDerivation, NotBlockPreserving. The block identities and the
/// reassembly are verified.
HanWeiBlocks sigma_derivation_blocks(const TriAlgebra& t, const LinMap& d, const LinMap& sigma);
LinMap reassemble(const TriAlgebra& t, const HanWeiBlocks& blocks, const AutBlocks& sigma_blocks);

/// x0 with d = delta_inner(x0), if any.
std::optional<Vec> inner_generator(const FinAlgebra& alg, const LinMap& d, const LinMap& sigma);

struct PosnerResult {
  Subspace space;           // sigma-derivations that are also sigma-commuting
  bool hypotheses = false;  // T faithful and sigma block-preserving
};

/// When the hypotheses hold a nonzero intersection is a TheoremViolation.
PosnerResult posner_intersection(const TriAlgebra& t, const LinMap& sigma);

/// Identities every sigma-biderivation satisfies: D(x,y)[u,v] = sigma([x,y]) D(u,v)
/// on basis 4-tuples, D(e,e) = -D(e,1-e) = -D(1-e,e) = D(1-e,1-e) for e = p,
/// and, for faithful T with block-preserving sigma, D(x,y) = p D(x,y) q when
/// [x,y] = 0 on basis pairs. TheoremViolation on failure.
void check_biderivation_identities(const TriAlgebra& t, const LinMap& sigma, const BilinMap& d);

}  // namespace trialg
