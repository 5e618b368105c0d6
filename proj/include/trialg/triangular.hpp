#pragma once

#include "trialg/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trialg {

/// (A, B)-bimodule given by basis actions: left[a * dim_m + m] = e_a . f_m and
/// right[m * dim_b + b] = f_m . g_b, both as coordinates in M.
struct Bimodule {
  Field field;
  std::size_t dim_a = 0;
  std::size_t dim_m = 0;
  std::size_t dim_b = 0;
  std::vector<std::string> names;
  std::vector<Vec> left;
  std::vector<Vec> right;
};

/// Linear isomorphism between two subspaces, stored through the images of the
/// domain's RREF basis.
class PairingMap {
 public:
  PairingMap() = default;
  /// Graph G inside F^{n_dom} (+) F^{n_cod}, domain coordinates first. Throws
  /// InvalidArgument if G is not the graph of a function.
  static PairingMap from_graph(const Subspace& graph, std::size_t n_dom, std::size_t n_cod);

  const Subspace& domain() const { return domain_; }
  const Subspace& codomain() const { return codomain_; }
  const std::vector<Vec>& images() const { return images_; }
  /// Throws NotInSpan outside the domain.
  Vec apply(const Vec& x) const;
  bool injective() const { return codomain_.dim() == domain_.dim(); }
  PairingMap inverse() const;

 private:
  Subspace domain_;
  Subspace codomain_;
  std::vector<Vec> images_;
  Subspace graph_;
  std::size_t n_dom_ = 0;
  std::size_t n_cod_ = 0;
};

/// Trian(A, M, B). Total basis order is A's basis, then M's, then B's.
class TriAlgebra {
 public:
  TriAlgebra() = default;

  const FinAlgebra& A() const { return a_; }
  const FinAlgebra& B() const { return b_; }
  const Bimodule& M() const { return m_; }
  const FinAlgebra& total() const { return total_; }
  Field field() const { return m_.field; }

  std::size_t dim_a() const { return a_.dim(); }
  std::size_t dim_m() const { return m_.dim_m; }
  std::size_t dim_b() const { return b_.dim(); }
  std::size_t dim() const { return total_.dim(); }
  std::size_t m_offset() const { return dim_a(); }
  std::size_t b_offset() const { return dim_a() + dim_m(); }

  Vec p() const { return embed_a(a_.unit()); }
  Vec q() const { return embed_b(b_.unit()); }
  Vec one() const { return total_.unit(); }

  Vec embed_a(const Vec& a) const;
  Vec embed_m(const Vec& m) const;
  Vec embed_b(const Vec& b) const;
  Vec part_a(const Vec& x) const;
  Vec part_m(const Vec& x) const;
  Vec part_b(const Vec& x) const;
  /// Embedded a-part of x, i.e. p x p.
  Vec corner_a(const Vec& x) const { return embed_a(part_a(x)); }
  Vec corner_m(const Vec& x) const { return embed_m(part_m(x)); }
  Vec corner_b(const Vec& x) const { return embed_b(part_b(x)); }

  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& b) const;
  /// Matrix of m -> a m on M.
  Mat left_action(const Vec& a) const;
  /// Matrix of m -> m b on M.
  Mat right_action(const Vec& b) const;

  /// A, M and B as subspaces of the total space.
  Subspace block_a() const;
  Subspace block_m() const;
  Subspace block_b() const;
  /// Subspace of A (resp. B) lifted into the total space.
  Subspace lift_a(const Subspace& s) const;
  Subspace lift_b(const Subspace& s) const;
  Subspace lift_m(const Subspace& s) const;
  /// Projections of a subspace of T onto A and B coordinates.
  Subspace project_a(const Subspace& s) const;
  Subspace project_b(const Subspace& s) const;

  bool left_faithful() const { return left_faithful_; }
  bool right_faithful() const { return right_faithful_; }
  bool faithful() const { return left_faithful_ && right_faithful_; }

 private:
  friend TriAlgebra build_triangular(FinAlgebra a, Bimodule m, FinAlgebra b, bool allow_zero_m);
  FinAlgebra a_;
  FinAlgebra b_;
  Bimodule m_;
  FinAlgebra total_;
  bool left_faithful_ = false;
  bool right_faithful_ = false;
};

/// Validates the bimodule axioms and assembles the total algebra. M = 0 is
/// rejected with ZeroModule unless allow_zero_m is set.
TriAlgebra build_triangular(FinAlgebra a, Bimodule m, FinAlgebra b, bool allow_zero_m = false);

/// Z(T) from the block description: pairs (a, b) with a in Z(A), b in Z(B)
/// and a m = m b on every basis m.
Subspace center_T(const TriAlgebra& t);

struct Annihilators {
  Subspace left_kernel;   // {a in A : a M = 0}
  Subspace right_kernel;  // {b in B : M b = 0}
  Subspace lann_m;        // {x in T : x M = 0}
  Subspace rann_m;        // {x in T : M x = 0}
};

/// When both kernels vanish also checks lann = M + B and rann = A + M,
/// throwing TheoremViolation otherwise.
Annihilators annihilators(const TriAlgebra& t);

/// tau: pi_A(Z(T)) -> pi_B(Z(T)) with a m = m tau(a). Throws NotFaithful.
PairingMap tau_iso(const TriAlgebra& t);

struct FaithfulQuotient {
  TriAlgebra algebra;
  Quotient a_quotient;
  Quotient b_quotient;
};

/// Trian(A/L, M, B/R); the result is checked to be faithful on both sides.
FaithfulQuotient faithful_quotient(const TriAlgebra& t);

struct NilpotencyCheck {
  std::optional<std::size_t> index;
  bool a_part_nilpotent = false;
  bool b_part_nilpotent = false;
};

/// Powers up to dim + 1, cross-checked against nilpotency of the a- and
/// b-parts (TheoremViolation on disagreement).
NilpotencyCheck nilpotency_T(const TriAlgebra& t, const Vec& x);

/// rad(A) + M + rad(B) inside T. If both radicals vanish the result is
/// checked to equal M.
Subspace nil_radical_T(const TriAlgebra& t);

}  // namespace trialg
