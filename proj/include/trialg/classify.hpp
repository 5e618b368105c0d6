#pragma once

#include "trialg/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialg {

struct Check {
  std::string name;
  Tri status = Tri::Undecided;
  std::string evidence;
};

struct NamedVec {
  std::string name;
  Vec value;
};

/// Serialized as {theorem, hypotheses, verdict, witnesses, violations}.
struct Report {
  std::string theorem;
  std::vector<Check> hypotheses;
  std::string verdict;
  std::vector<NamedVec> witnesses;
  std::vector<std::string> violations;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

// --- sigma-biderivations ---------------------------------------------------

struct ExtremalSplit {
  Vec x0;  // D(p, p)
  BilinMap psi;
  BilinMap d0;
};

/// D = psi_{D(p,p)} + D0 with D0(p, p) = 0. Needs faithful T and
/// block-preserving sigma when D(p, p) != 0 (PreconditionFails otherwise).
/// Throws NotSigmaBiderivation.
ExtremalSplit extremal_split(const TriAlgebra& t, const LinMap& sigma, const BilinMap& d);

/// lambda in Z_sigma with D0 = lambda [x, y], solved over Z_sigma coordinates.
/// nullopt when there is none; if innercond_hypotheses all pass that is a
/// TheoremViolation. Throws NotSigmaBiderivation, PreconditionFails if D0(p,p) != 0.
std::optional<Vec> inner_biderivation_witness(const TriAlgebra& t, const LinMap& sigma, const BilinMap& d0);

/// Hypotheses (i)-(iv); (iii) uses the strong reading (no nonzero lambda in
/// Z_sigma kills a nonzero x). Throws NotFaithful.
Report innercond_hypotheses(const TriAlgebra& t, const AutBlocks& blocks);

// --- sigma-commuting maps ------------------------------------------------------

struct CommutingBlocks {
  LinMap delta1;  // A -> A
  LinMap delta2;  // M -> A
  LinMap delta3;  // B -> A
  LinMap mu1;     // A -> B
  LinMap mu2;     // M -> B
  LinMap mu3;     // B -> B
};

/// Block extraction for block-preserving sigma; the M-block formula and
/// conditions (i)-(vi) are verified (TheoremViolation). Throws
/// NotSigmaCommuting.
CommutingBlocks commuting_blocks(const TriAlgebra& t, const AutBlocks& blocks, const LinMap& theta);
/// Theta rebuilt from its blocks.
LinMap reassemble(const TriAlgebra& t, const CommutingBlocks& cb, const AutBlocks& blocks);

struct ProperWitness {
  Vec lambda;
  LinMap omega;
};

struct Properness {
  bool criterion_ii = false;
  bool criterion_iii = false;
  bool direct = false;
  std::optional<ProperWitness> witness;
  /// First failing part of criterion (iii), empty when proper.
  std::string failed;
};

/// The three verdicts must agree (TheoremViolation). Also checks
/// mu1([a,a']) in pi_B(Z_sigma) and delta3([b,b']) in pi_A(Z_sigma).
/// Throws NotFaithful.
Properness properness(const TriAlgebra& t, const AutBlocks& blocks, const LinMap& theta);

/// (i), (ii), and (iii) searched over M basis vectors and pairwise sums; the
/// witness m0 is reported when found.
Report caractcomm_hypotheses(const TriAlgebra& t, const AutBlocks& blocks);

/// Identity when sigma is commuting (TheoremViolation otherwise on faithful
/// T); else the failing verdict.
struct CommutingAutoResult {
  bool identity = false;
  Verdict verdict;
};
CommutingAutoResult commuting_auto_check(const TriAlgebra& t, const LinMap& sigma);

// --- endomorphisms ----------------------------------------------------------------

struct EndoBlocks {
  LinMap chi1;    // A -> A
  LinMap chi2;    // A -> M
  LinMap chi3;    // A -> B
  LinMap gamma1;  // B -> B
  LinMap gamma2;  // B -> M
  LinMap gamma3;  // B -> A
  LinMap h;       // M -> M
};

struct EndoAnalysis {
  EndoBlocks blocks;
  bool m_preserving = false;  // phi(M) inside M
  bool bijective = false;
  bool anti_partible = false;  // chi1 = gamma1 = 0
  Report report;
};

/// Throws NotEndomorphism. The Thm0 layer needs phi(M) inside M; (ii), (iii),
/// (v), (vi) additionally need phi bijective. The Thm1 layer needs h bijective.
/// Failing a gated assertion is a TheoremViolation.
EndoAnalysis endo_blocks(const TriAlgebra& t, const LinMap& phi);
LinMap reassemble(const TriAlgebra& t, const EndoBlocks& eb);

struct MonoEpi {
  bool m1 = false, m2 = false, m3 = false;
  bool e1 = false;
  bool e2_sum = false, e3_sum = false;
  bool e2_literal = false, e3_literal = false;
  bool mono = false;  // m1 && m2 && m3
  bool epi = false;   // e1 && e2_sum && e3_sum
  bool rank_injective = false;
  bool rank_surjective = false;
};

/// Mismatch with the rank of the assembled map is a TheoremViolation. Throws
/// NotMPreserving.
MonoEpi endo_mono_epi(const TriAlgebra& t, const EndoAnalysis& ea);

struct IdealSplit {
  Subspace i;  // ker chi3 + M + ker gamma3
  Subspace j;  // ker chi1 + ker gamma1
  std::optional<TriAlgebra> i_algebra;
  std::optional<TriAlgebra> j_algebra;  // diagonal, M = 0
  std::optional<LinMap> phi_i;
  std::optional<LinMap> phi_j;
};

/// Verifies both are ideals, T = I (+) J, phi(I) = I, phi(J) = J, phi|_I
/// partible and phi|_J anti-partible. Throws NotAutomorphism, NotMPreserving.
IdealSplit ideal_split(const TriAlgebra& t, const LinMap& phi);

// --- partibility ---------------------------------------------------------------------

struct PartibleWitness {
  Vec z;
  LinMap sigma_bar;
};

/// sigma = phi_z sigma_bar with phi_z(x) = z^{-1} x z and sigma_bar
/// block-preserving; only z = 1 + m0 with m0 read off sigma(p) is tried. Any
/// such factorization forces sigma(p) = p + (M-part), so nullopt also means
/// sigma is not partible.
/// Throws NotAutomorphism.
std::optional<PartibleWitness> partible_witness(const TriAlgebra& t, const LinMap& sigma);

/// Sufficient conditions only (Condition (I) on A or B, Nil*(A) = 0 or
/// Nil*(B) = 0); never claims non-partibility.
Report partibility_sufficient(const TriAlgebra& t, std::uint64_t budget = default_budget());

/// x -> z d(x); for bilinear maps (x, y) -> z D(x, y).
LinMap z_transfer(const FinAlgebra& alg, const Vec& z, const LinMap& d);
BilinMap z_transfer(const FinAlgebra& alg, const Vec& z, const BilinMap& d);

}  // namespace trialg
