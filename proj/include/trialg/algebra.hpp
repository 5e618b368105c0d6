#pragma once

#include "trialg/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trialg {

/// Finite-dimensional unital associative algebra given by the products of
/// basis vectors. Associativity and the unit laws are checked on creation.
class FinAlgebra {
 public:
  FinAlgebra() = default;

  /// products[i * dim + j] = e_i e_j. Throws NonAssociative, UnitLawViolation,
  /// ShapeMismatch, FieldMismatch.
  static FinAlgebra create(Field f, std::vector<std::string> names, std::vector<Vec> products, Vec unit);

  Field field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }
  Vec basis_vec(std::size_t i) const { return unit_vec(field_, dim(), i); }
  Vec zero() const { return zero_vec(field_, dim()); }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec commutator(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y.
  Mat left_mult(const Vec& x) const;
  /// Matrix of y -> y x.
  Mat right_mult(const Vec& x) const;
  bool is_commutative() const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<Vec> products_;
  Vec unit_;
};

/// {a : f(x) a = a x for all x}; f = identity gives the center.
Subspace twisted_center(const FinAlgebra& alg, const Mat& f);
Subspace center(const FinAlgebra& alg);
/// Span of all commutators [e_i, e_j].
Subspace commutator_span(const FinAlgebra& alg);
/// span{ s t : s in S, t in T }
Subspace product_space(const FinAlgebra& alg, const Subspace& s, const Subspace& t);
bool is_two_sided_ideal(const FinAlgebra& alg, const Subspace& s);
/// Smallest k with x^k = 0, searched up to dim + 1.
std::optional<std::size_t> nilpotency_index(const FinAlgebra& alg, const Vec& x);

struct Quotient {
  FinAlgebra algebra;
  /// dim(A/I) x dim(A): coordinates of the class of each basis vector.
  Mat projection;
  /// Representative coordinates: quotient basis i is the class of e_{lift[i]}.
  std::vector<std::size_t> lift;
};

/// Basis of A/I is the classes of the non-pivot unit vectors of I. Throws
/// NotAnIdeal.
Quotient quotient(const FinAlgebra& alg, const Subspace& ideal);

/// Subspace closed under multiplication that owns a unit of its own (it need
/// not be the unit of the ambient algebra). Basis = the subspace's RREF basis.
/// Throws InvalidArgument if not closed or no unit exists.
FinAlgebra subalgebra(const FinAlgebra& alg, const Subspace& s, const std::vector<std::string>& names = {});

/// Direct product A x B with the componentwise multiplication.
FinAlgebra product_algebra(const FinAlgebra& a, const FinAlgebra& b);

/// Jacobson radical as the kernel of the trace form tr(L_{xy}); needs char 0
/// or p > dim (CharTooSmall otherwise). The result is re-verified to be a
/// nilpotent two-sided ideal with radical-free quotient.
Subspace radical(const FinAlgebra& alg);
/// R, R^2, ... down to the first zero power.
std::vector<Subspace> ideal_powers(const FinAlgebra& alg, const Subspace& ideal);

enum class Tri { Pass, Fail, Undecided };
const char* tri_name(Tri t);

/// Enumerate every element of an F_p algebra; throws BudgetExceeded when
/// p^dim exceeds the budget and InvalidArgument over Q.
std::vector<Vec> enumerate_elements(const FinAlgebra& alg, std::uint64_t budget);
std::uint64_t default_budget();

struct StructureReport {
  std::string mode;
  Tri verdict = Tri::Undecided;
  /// "exhaustive", "commutative", "radical", ...
  std::string method;
  std::vector<Vec> witnesses;
  std::vector<Vec> idempotents;
  std::string note;
};

enum class StructureMode { ConditionI, Nondegenerate, Idempotents, CentralIdempotents };

/// Over F_p within budget the answer is exhaustive. Over Q only sufficient
/// criteria are used and the verdict may be Undecided. Where the elements are
/// enumerated, the chain commutative => idempotents central => Condition (I)
/// is re-checked and a break throws TheoremViolation.
StructureReport structure_checks(const FinAlgebra& alg, StructureMode mode, std::uint64_t budget);

}  // namespace trialg
