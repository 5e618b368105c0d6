#include "trialg/spaces.hpp"

#include "trialg/errors.hpp"

#include <cstdlib>
#include <string>

namespace trialg {

namespace {

void require_sigma(const FinAlgebra& alg, const std::optional<LinMap>& sigma) {
  if (!sigma) throw Error(ErrorKind::SigmaMissing, "sigma-kind needs sigma");
  if (sigma->rows() != alg.dim() || sigma->cols() != alg.dim()) throw Error(ErrorKind::ShapeMismatch, "sigma shape");
  if (!is_automorphism(alg, *sigma)) throw Error(ErrorKind::SigmaNotAutomorphism, "sigma is not an algebra automorphism");
}

void sub_at(Vec& row, std::size_t k, const Scalar& v) {
  if (!v.is_zero()) row[k] = row[k] - v;
}

void add_at(Vec& row, std::size_t k, const Scalar& v) {
  if (!v.is_zero()) row[k] = row[k] + v;
}

std::string pair_str(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Derivation: return "derivation";
    case SpaceKind::SigmaDerivation: return "sigma_derivation";
    case SpaceKind::Biderivation: return "biderivation";
    case SpaceKind::SigmaBiderivation: return "sigma_biderivation";
    case SpaceKind::SigmaCommuting: return "sigma_commuting";
  }
  return "?";
}

bool is_bilinear(SpaceKind k) { return k == SpaceKind::Biderivation || k == SpaceKind::SigmaBiderivation; }

bool needs_sigma(SpaceKind k) {
  return k == SpaceKind::SigmaDerivation || k == SpaceKind::SigmaBiderivation || k == SpaceKind::SigmaCommuting;
}

std::vector<LinMap> MapSpace::linear_basis() const {
  std::vector<LinMap> out;
  for (const auto& v : space.basis()) out.push_back(unflatten_linear(space.field(), alg_dim, v));
  return out;
}

std::vector<BilinMap> MapSpace::bilinear_basis() const {
  std::vector<BilinMap> out;
  for (const auto& v : space.basis()) out.push_back(BilinMap::unflatten(space.field(), alg_dim, v));
  return out;
}

bool MapSpace::contains(const LinMap& f) const { return space.contains(flatten(f)); }
bool MapSpace::contains(const BilinMap& d) const { return space.contains(d.flatten()); }

std::size_t default_bilinear_cap() {
  if (const char* env = std::getenv("TRIALG_MAX_BILINEAR_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 8;
}

MapSpace solve_space(const FinAlgebra& alg, SpaceKind kind, const std::optional<LinMap>& sigma, std::size_t bilinear_cap) {
  const Field f = alg.field();
  const std::size_t n = alg.dim();
  if (needs_sigma(kind)) require_sigma(alg, sigma);
  if (is_bilinear(kind) && n > bilinear_cap)
    throw Error(ErrorKind::BudgetExceeded, "bilinear solve on dim " + std::to_string(n) + " exceeds cap " + std::to_string(bilinear_cap));
  const LinMap left = needs_sigma(kind) ? *sigma : Mat::identity(f, n);

  // L[i]: y -> left(e_i) y, R[j]: y -> y e_j
  std::vector<Mat> L, R;
  for (std::size_t i = 0; i < n; ++i) {
    L.push_back(alg.left_mult(left.col(i)));
    R.push_back(alg.right_mult(alg.basis_vec(i)));
  }

  const std::size_t unknowns = is_bilinear(kind) ? n * n * n : n * n;
  EchelonBuilder rows(f, unknowns);
  const Vec zero_row = zero_vec(f, unknowns);
  auto lin = [n](std::size_t k, std::size_t j) { return k * n + j; };
  auto bil = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };

  switch (kind) {
    case SpaceKind::Derivation:
    case SpaceKind::SigmaDerivation:
      // d(e_i e_j) - d(e_i) e_j - left(e_i) d(e_j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t r = 0; r < n; ++r) {
            Vec row = zero_row;
            const Vec& c = alg.product(i, j);
            for (std::size_t a = 0; a < n; ++a) {
              add_at(row, lin(r, a), c[a]);
              sub_at(row, lin(a, i), R[j].at(r, a));
              sub_at(row, lin(a, j), L[i].at(r, a));
            }
            rows.add(std::move(row));
          }
      break;
    case SpaceKind::SigmaCommuting:
      // left(x) f(x) - f(x) x on e_i, then its polarization on e_i, e_j
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) {
          Vec row = zero_row;
          for (std::size_t a = 0; a < n; ++a) {
            add_at(row, lin(a, i), L[i].at(r, a));
            sub_at(row, lin(a, i), R[i].at(r, a));
          }
          rows.add(std::move(row));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t r = 0; r < n; ++r) {
            Vec row = zero_row;
            for (std::size_t a = 0; a < n; ++a) {
              add_at(row, lin(a, j), L[i].at(r, a));
              add_at(row, lin(a, i), L[j].at(r, a));
              sub_at(row, lin(a, i), R[j].at(r, a));
              sub_at(row, lin(a, j), R[i].at(r, a));
            }
            rows.add(std::move(row));
          }
      break;
    case SpaceKind::Biderivation:
    case SpaceKind::SigmaBiderivation:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < n; ++r) {
              // D(e_i e_j, e_k) - D(e_i, e_k) e_j - left(e_i) D(e_j, e_k)
              Vec row = zero_row;
              const Vec& c = alg.product(i, j);
              for (std::size_t a = 0; a < n; ++a) {
                add_at(row, bil(a, k, r), c[a]);
                sub_at(row, bil(i, k, a), R[j].at(r, a));
                sub_at(row, bil(j, k, a), L[i].at(r, a));
              }
              rows.add(std::move(row));
              // D(e_i, e_j e_k) - D(e_i, e_j) e_k - left(e_j) D(e_i, e_k)
              Vec row2 = zero_row;
              const Vec& c2 = alg.product(j, k);
              for (std::size_t a = 0; a < n; ++a) {
                add_at(row2, bil(i, a, r), c2[a]);
                sub_at(row2, bil(i, j, a), R[k].at(r, a));
                sub_at(row2, bil(i, k, a), L[j].at(r, a));
              }
              rows.add(std::move(row2));
            }
      break;
  }

  MapSpace out;
  out.kind = kind;
  out.alg_dim = n;
  if (needs_sigma(kind)) out.sigma = sigma;
  out.space = rows.rank() == 0 ? Subspace::full(f, unknowns) : kernel_basis(Mat::from_rows(f, unknowns, rows.rows()));

  for (const auto& v : out.space.basis()) {
    bool ok = true;
    switch (kind) {
      case SpaceKind::Derivation:
        ok = classify_linear(alg, LinearKind::Derivation, unflatten_linear(f, n, v)).holds;
        break;
      case SpaceKind::SigmaDerivation:
        ok = classify_linear(alg, LinearKind::SigmaDerivation, unflatten_linear(f, n, v), sigma).holds;
        break;
      case SpaceKind::SigmaCommuting:
        ok = classify_linear(alg, LinearKind::SigmaCommuting, unflatten_linear(f, n, v), sigma).holds;
        break;
      case SpaceKind::Biderivation:
        ok = classify_bilinear(alg, BilinearKind::Biderivation, BilinMap::unflatten(f, n, v)).holds;
        break;
      case SpaceKind::SigmaBiderivation:
        ok = classify_bilinear(alg, BilinearKind::SigmaBiderivation, BilinMap::unflatten(f, n, v), sigma).holds;
        break;
    }
    if (!ok) throw TheoremViolation("solve_space", std::string("basis element fails the ") + kind_name(kind) + " identity");
  }
  return out;
}

LinMap delta_inner(const FinAlgebra& alg, const Vec& x0, const LinMap& sigma) {
  LinMap d(alg.field(), alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) d.set_col(i, sigma_commutator(alg, sigma, alg.basis_vec(i), x0));
  if (!classify_linear(alg, LinearKind::SigmaDerivation, d, sigma).holds)
    throw TheoremViolation("newcomm", "inner sigma-derivation fails the sigma-derivation identity");
  return d;
}

BilinMap Delta_inner(const FinAlgebra& alg, const Vec& lambda, const LinMap& sigma) {
  if (!sigma_center_oracle(alg, sigma).contains(lambda)) throw Error(ErrorKind::NotSigmaCentral, "lambda is not in Z_sigma");
  if (alg.is_commutative()) throw Error(ErrorKind::CommutativeAlgebra, "inner sigma-biderivations need [T, T] != 0");
  const std::size_t n = alg.dim();
  std::vector<Vec> vals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vals.push_back(alg.mul(lambda, alg.commutator(alg.basis_vec(i), alg.basis_vec(j))));
  BilinMap d = BilinMap::from_values(alg.field(), n, std::move(vals));
  if (!classify_bilinear(alg, BilinearKind::SigmaBiderivation, d, sigma).holds)
    throw TheoremViolation("innbi", "lambda [x, y] fails the sigma-biderivation identity");
  return d;
}

BilinMap psi_extremal(const FinAlgebra& alg, const Vec& x0, const LinMap& sigma) {
  if (sigma_center_oracle(alg, sigma).contains(x0)) throw Error(ErrorKind::CentralElement, "x0 lies in Z_sigma");
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(sigma_commutator(alg, sigma, alg.commutator(alg.basis_vec(i), alg.basis_vec(j)), x0)))
        throw Error(ErrorKind::PreconditionFails, "[[e_i, e_j], x0]_sigma != 0 at " + pair_str(i, j));
  std::vector<Vec> inner(n);
  for (std::size_t j = 0; j < n; ++j) inner[j] = sigma_commutator(alg, sigma, alg.basis_vec(j), x0);
  std::vector<Vec> vals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vals.push_back(sigma_commutator(alg, sigma, alg.basis_vec(i), inner[j]));
  BilinMap d = BilinMap::from_values(alg.field(), n, std::move(vals));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.value(i, j) != d.value(j, i)) throw TheoremViolation("extbi", "psi not symmetric at " + pair_str(i, j));
  if (!classify_bilinear(alg, BilinearKind::SigmaBiderivation, d, sigma).holds)
    throw TheoremViolation("extbi", "psi fails the sigma-biderivation identity");
  return d;
}

LinMap reassemble(const TriAlgebra& t, const HanWeiBlocks& blocks, const AutBlocks& sb) {
  const Field f = t.field();
  LinMap d(f, t.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim_a(); ++i)
    d.set_col(i, t.embed_a(blocks.d_a.col(i)) + t.embed_m(t.act_left(sb.f.col(i), blocks.m_d)));
  for (std::size_t j = 0; j < t.dim_m(); ++j) d.set_col(t.m_offset() + j, t.embed_m(blocks.xi.col(j)));
  for (std::size_t k = 0; k < t.dim_b(); ++k)
    d.set_col(t.b_offset() + k,
              t.embed_b(blocks.d_b.col(k)) - t.embed_m(t.act_right(blocks.m_d, unit_vec(f, t.dim_b(), k))));
  return d;
}

HanWeiBlocks sigma_derivation_blocks(const TriAlgebra& t, const LinMap& d, const LinMap& sigma) {
  const FinAlgebra& alg = t.total();
  if (!classify_linear(alg, LinearKind::SigmaDerivation, d, sigma).holds)
    throw Error(ErrorKind::NotSigmaDerivation, "d is not a sigma-derivation");
  const AutBlocks sb = block_decompose(t, sigma);
  const Field f = t.field();
  HanWeiBlocks out{Mat(f, t.dim_a(), t.dim_a()), Mat(f, t.dim_b(), t.dim_b()), t.part_m(d * t.p()), Mat(f, t.dim_m(), t.dim_m())};
  for (std::size_t i = 0; i < t.dim_a(); ++i) out.d_a.set_col(i, t.part_a(d.col(i)));
  for (std::size_t j = 0; j < t.dim_m(); ++j) out.xi.set_col(j, t.part_m(d.col(t.m_offset() + j)));
  for (std::size_t k = 0; k < t.dim_b(); ++k) out.d_b.set_col(k, t.part_b(d.col(t.b_offset() + k)));

  const LinMap id_a = Mat::identity(f, t.dim_a()), id_b = Mat::identity(f, t.dim_b());
  if (!classify_alpha_beta(t.A(), AlphaBetaKind::Derivation, out.d_a, id_a, sb.f).holds)
    throw TheoremViolation("hanwei", "d_A is not an f_sigma-derivation");
  if (!classify_alpha_beta(t.B(), AlphaBetaKind::Derivation, out.d_b, id_b, sb.g).holds)
    throw TheoremViolation("hanwei", "d_B is not a g_sigma-derivation");
  for (std::size_t j = 0; j < t.dim_m(); ++j) {
    const Vec m = unit_vec(f, t.dim_m(), j);
    for (std::size_t i = 0; i < t.dim_a(); ++i) {
      const Vec a = unit_vec(f, t.dim_a(), i);
      if (out.xi * t.act_left(a, m) != t.act_left(out.d_a * a, m) + t.act_left(sb.f * a, out.xi * m))
        throw TheoremViolation("properxi", "xi(am) != d_A(a) m + f(a) xi(m)");
    }
    for (std::size_t k = 0; k < t.dim_b(); ++k) {
      const Vec b = unit_vec(f, t.dim_b(), k);
      if (out.xi * t.act_right(m, b) != t.act_right(out.xi * m, b) + t.act_right(sb.nu * m, out.d_b * b))
        throw TheoremViolation("properxi", "xi(mb) != xi(m) b + nu(m) d_B(b)");
    }
  }
  if (reassemble(t, out, sb) != d) throw TheoremViolation("hanwei", "block form does not reproduce d");
  return out;
}

std::optional<Vec> inner_generator(const FinAlgebra& alg, const LinMap& d, const LinMap& sigma) {
  const std::size_t n = alg.dim();
  Mat sys(alg.field(), n * n, n);
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i) {
    const Mat c = alg.left_mult(sigma.col(i)) - alg.right_mult(alg.basis_vec(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) sys.at(i * n + r, k) = c.at(r, k);
    const Vec di = d.col(i);
    rhs.insert(rhs.end(), di.begin(), di.end());
  }
  return solve_linear(sys, rhs);
}

PosnerResult posner_intersection(const TriAlgebra& t, const LinMap& sigma) {
  PosnerResult out;
  out.hypotheses = t.faithful() && is_block_preserving(t, sigma);
  const MapSpace sd = solve_space(t.total(), SpaceKind::SigmaDerivation, sigma);
  const MapSpace sc = solve_space(t.total(), SpaceKind::SigmaCommuting, sigma);
  out.space = intersect(sd.space, sc.space);
  if (out.hypotheses && !out.space.is_zero())
    throw TheoremViolation("posner", "nonzero sigma-commuting sigma-derivation on a faithful instance");
  return out;
}

void check_biderivation_identities(const TriAlgebra& t, const LinMap& sigma, const BilinMap& d) {
  const FinAlgebra& alg = t.total();
  const std::size_t n = alg.dim();
  std::vector<Vec> comm(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) comm[i * n + j] = alg.commutator(alg.basis_vec(i), alg.basis_vec(j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec s = sigma * comm[x * n + y];
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (alg.mul(d.value(x, y), comm[u * n + v]) != alg.mul(s, d.value(u, v)))
            throw TheoremViolation("aux", "D(x,y)[u,v] != sigma([x,y]) D(u,v) at " + pair_str(x, y) + pair_str(u, v));
    }
  const Vec p = t.p(), q = t.q();
  const Vec pp = d.apply(p, p);
  if (d.apply(p, q) != -pp || d.apply(q, p) != -pp || d.apply(q, q) != pp)
    throw TheoremViolation("aux", "D(e,e) = -D(e,1-e) = -D(1-e,e) = D(1-e,1-e) fails for e = p");
  if (!t.faithful() || !is_block_preserving(t, sigma)) return;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!is_zero(comm[x * n + y])) continue;
      const Vec v = d.value(x, y);
      if (v != alg.mul(alg.mul(p, v), q)) throw TheoremViolation("aux2", "D(x,y) != p D(x,y) q at " + pair_str(x, y));
    }
}

}  // namespace trialg
