#include "trialg/sigma.hpp"

#include "trialg/errors.hpp"

#include <string>

namespace trialg {

namespace {

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_shape(const FinAlgebra& alg, const LinMap& f, const char* what) {
  if (f.rows() != alg.dim() || f.cols() != alg.dim())
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + " must be " + std::to_string(alg.dim()) + "x" + std::to_string(alg.dim()));
  if (f.field() != alg.field()) throw Error(ErrorKind::FieldMismatch, what);
}

const LinMap& need_sigma(const FinAlgebra& alg, const std::optional<LinMap>& sigma) {
  if (!sigma) throw Error(ErrorKind::SigmaMissing, "sigma-kind needs sigma");
  check_shape(alg, *sigma, "sigma");
  if (!is_automorphism(alg, *sigma)) throw Error(ErrorKind::SigmaNotAutomorphism, "sigma is not an algebra automorphism");
  return *sigma;
}

Verdict fail(std::vector<std::size_t> w, Vec lhs, Vec rhs, std::string note = {}) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(w);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.note = std::move(note);
  return v;
}

// d(e_i e_j) against d(e_i) right(e_j) + left(e_i) d(e_j) for every pair
Verdict derivation_rule(const FinAlgebra& alg, const LinMap& d, const LinMap& right, const LinMap& left) {
  const std::size_t n = alg.dim();
  std::vector<Vec> dv(n), rv(n), lv(n);
  for (std::size_t i = 0; i < n; ++i) {
    dv[i] = d.col(i);
    rv[i] = right.col(i);
    lv[i] = left.col(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = d * alg.product(i, j);
      const Vec rhs = alg.mul(dv[i], rv[j]) + alg.mul(lv[i], dv[j]);
      if (lhs != rhs) return fail({i, j}, lhs, rhs);
    }
  return {};
}

// Q(x) = f(x) right(x) - left(x) f(x) must vanish. Q is a quadratic form, so
// Q = 0 on every e_i and every e_i + e_j decides it in any characteristic.
Verdict quadratic_rule(const FinAlgebra& alg, const LinMap& f, const LinMap& right, const LinMap& left) {
  const std::size_t n = alg.dim();
  auto q = [&](const Vec& x, Vec& lhs, Vec& rhs) {
    const Vec fx = f * x;
    lhs = alg.mul(left * x, fx);
    rhs = alg.mul(fx, right * x);
  };
  Vec lhs, rhs;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = alg.basis_vec(i);
    q(x, lhs, rhs);
    if (lhs != rhs) {
      Verdict v = fail({i}, lhs - rhs, zero_vec(alg.field(), n), "x = e_" + std::to_string(i));
      v.point = x;
      return v;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec x = alg.basis_vec(i) + alg.basis_vec(j);
      q(x, lhs, rhs);
      if (lhs != rhs) {
        Verdict v = fail({i, j}, lhs - rhs, zero_vec(alg.field(), n), "x = e_" + std::to_string(i) + " + e_" + std::to_string(j));
        v.point = x;
        return v;
      }
    }
  return {};
}

Verdict bilinear_rule(const FinAlgebra& alg, const BilinMap& d, const LinMap& right, const LinMap& left) {
  const std::size_t n = alg.dim();
  std::vector<Vec> rv(n), lv(n);
  for (std::size_t i = 0; i < n; ++i) {
    rv[i] = right.col(i);
    lv[i] = left.col(i);
  }
  // first slot: D(e_i e_j, e_k) = D(e_i, e_k) right(e_j) + left(e_i) D(e_j, e_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = d.apply(alg.product(i, j), alg.basis_vec(k));
        const Vec rhs = alg.mul(d.value(i, k), rv[j]) + alg.mul(lv[i], d.value(j, k));
        if (lhs != rhs) return fail({i, j, k}, lhs, rhs, "first argument");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = d.apply(alg.basis_vec(i), alg.product(j, k));
        const Vec rhs = alg.mul(d.value(i, j), rv[k]) + alg.mul(lv[j], d.value(i, k));
        if (lhs != rhs) return fail({i, j, k}, lhs, rhs, "second argument");
      }
  return {};
}

void check_bilin_shape(const FinAlgebra& alg, const BilinMap& d) {
  if (d.dim() != alg.dim()) throw Error(ErrorKind::ShapeMismatch, "bilinear map dimension");
  if (d.field() != alg.field()) throw Error(ErrorKind::FieldMismatch, "bilinear map field");
}

LinMap inverse_automorphism(const FinAlgebra& alg, const LinMap& a, const char* what) {
  check_shape(alg, a, what);
  if (!is_automorphism(alg, a)) throw Error(ErrorKind::NotAutomorphism, std::string(what) + " is not an automorphism");
  return *inverse(a);
}

}  // namespace

const char* kind_name(LinearKind k) {
  switch (k) {
    case LinearKind::Endomorphism: return "endomorphism";
    case LinearKind::Automorphism: return "automorphism";
    case LinearKind::Derivation: return "derivation";
    case LinearKind::SigmaDerivation: return "sigma_derivation";
    case LinearKind::Commuting: return "commuting";
    case LinearKind::SigmaCommuting: return "sigma_commuting";
  }
  return "?";
}

const char* kind_name(BilinearKind k) {
  return k == BilinearKind::Biderivation ? "biderivation" : "sigma_biderivation";
}

bool is_endomorphism(const FinAlgebra& alg, const LinMap& f) {
  check_shape(alg, f, "map");
  return classify_linear(alg, LinearKind::Endomorphism, f).holds;
}

bool is_automorphism(const FinAlgebra& alg, const LinMap& f) {
  return is_endomorphism(alg, f) && rank(f) == alg.dim();
}

Verdict classify_linear(const FinAlgebra& alg, LinearKind kind, const LinMap& f, const std::optional<LinMap>& sigma) {
  check_shape(alg, f, "map");
  const LinMap id = Mat::identity(alg.field(), alg.dim());
  switch (kind) {
    case LinearKind::Endomorphism:
    case LinearKind::Automorphism: {
      const Vec f1 = f * alg.unit();
      if (f1 != alg.unit()) return fail({}, f1, alg.unit(), "f(1) != 1");
      const std::size_t n = alg.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vec lhs = f * alg.product(i, j);
          const Vec rhs = alg.mul(f.col(i), f.col(j));
          if (lhs != rhs) return fail({i, j}, lhs, rhs);
        }
      if (kind == LinearKind::Automorphism && rank(f) != n) {
        Verdict v = fail({}, {}, {}, "not bijective");
        return v;
      }
      return {};
    }
    case LinearKind::Derivation: return derivation_rule(alg, f, id, id);
    case LinearKind::SigmaDerivation: return derivation_rule(alg, f, id, need_sigma(alg, sigma));
    case LinearKind::Commuting: return quadratic_rule(alg, f, id, id);
    case LinearKind::SigmaCommuting: return quadratic_rule(alg, f, id, need_sigma(alg, sigma));
  }
  return {};
}

Verdict classify_bilinear(const FinAlgebra& alg, BilinearKind kind, const BilinMap& d, const std::optional<LinMap>& sigma) {
  check_bilin_shape(alg, d);
  const LinMap id = Mat::identity(alg.field(), alg.dim());
  const LinMap& left = kind == BilinearKind::Biderivation ? id : need_sigma(alg, sigma);
  Verdict v = bilinear_rule(alg, d, id, left);
  if (!v.holds || kind == BilinearKind::Biderivation) return v;
  // a sigma-biderivation vanishes whenever one argument is 1
  const Vec one = alg.unit();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vec x = alg.basis_vec(i);
    const Vec a = d.apply(x, one), b = d.apply(one, x);
    if (!is_zero(a) || !is_zero(b))
      throw TheoremViolation("aux", "sigma-biderivation with D(e_" + std::to_string(i) + ", 1) or D(1, e_" + std::to_string(i) + ") nonzero");
  }
  return v;
}

Vec sigma_commutator(const FinAlgebra& alg, const LinMap& sigma, const Vec& x, const Vec& y) {
  return alg.mul(sigma * x, y) - alg.mul(y, x);
}

bool is_block_preserving(const TriAlgebra& t, const LinMap& sigma) {
  const Subspace blocks[3] = {t.block_a(), t.block_m(), t.block_b()};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const std::size_t bi = i < t.m_offset() ? 0 : (i < t.b_offset() ? 1 : 2);
    if (!blocks[bi].contains(sigma.col(i))) return false;
  }
  return true;
}

AutBlocks block_decompose(const TriAlgebra& t, const LinMap& sigma) {
  const FinAlgebra& alg = t.total();
  check_shape(alg, sigma, "sigma");
  if (!is_automorphism(alg, sigma)) throw Error(ErrorKind::NotAutomorphism, "sigma is not an automorphism of T");
  const Subspace blocks[3] = {t.block_a(), t.block_m(), t.block_b()};
  const char* block_names[3] = {"A", "M", "B"};
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const std::size_t bi = i < t.m_offset() ? 0 : (i < t.b_offset() ? 1 : 2);
    if (!blocks[bi].contains(sigma.col(i))) {
      std::string img;
      for (const auto& c : sigma.col(i)) img += (img.empty() ? "" : ",") + c.to_string();
      throw Error(ErrorKind::NotBlockPreserving,
                  "sigma(" + alg.names()[i] + ") = [" + img + "] leaves " + block_names[bi]);
    }
  }
  const Field f = t.field();
  AutBlocks out{Mat(f, t.dim_a(), t.dim_a()), Mat(f, t.dim_b(), t.dim_b()), Mat(f, t.dim_m(), t.dim_m())};
  for (std::size_t i = 0; i < t.dim_a(); ++i) out.f.set_col(i, t.part_a(sigma.col(i)));
  for (std::size_t i = 0; i < t.dim_m(); ++i) out.nu.set_col(i, t.part_m(sigma.col(t.m_offset() + i)));
  for (std::size_t i = 0; i < t.dim_b(); ++i) out.g.set_col(i, t.part_b(sigma.col(t.b_offset() + i)));

  if (!is_automorphism(t.A(), out.f)) throw TheoremViolation("autom", "A-block is not an automorphism of A");
  if (!is_automorphism(t.B(), out.g)) throw TheoremViolation("autom", "B-block is not an automorphism of B");
  if (rank(out.nu) != t.dim_m()) throw TheoremViolation("autom", "M-block is not bijective");
  for (std::size_t m = 0; m < t.dim_m(); ++m) {
    const Vec mv = unit_vec(f, t.dim_m(), m);
    for (std::size_t a = 0; a < t.dim_a(); ++a) {
      const Vec av = unit_vec(f, t.dim_a(), a);
      if (out.nu * t.act_left(av, mv) != t.act_left(out.f * av, out.nu * mv))
        throw TheoremViolation("autom", "nu(am) != f(a) nu(m)");
    }
    for (std::size_t b = 0; b < t.dim_b(); ++b) {
      const Vec bv = unit_vec(f, t.dim_b(), b);
      if (out.nu * t.act_right(mv, bv) != t.act_right(out.nu * mv, out.g * bv))
        throw TheoremViolation("autom", "nu(mb) != nu(m) g(b)");
    }
  }
  return out;
}

LinMap assemble(const TriAlgebra& t, const AutBlocks& blocks) {
  LinMap s(t.field(), t.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim_a(); ++i) s.set_col(i, t.embed_a(blocks.f.col(i)));
  for (std::size_t i = 0; i < t.dim_m(); ++i) s.set_col(t.m_offset() + i, t.embed_m(blocks.nu.col(i)));
  for (std::size_t i = 0; i < t.dim_b(); ++i) s.set_col(t.b_offset() + i, t.embed_b(blocks.g.col(i)));
  return s;
}

Subspace sigma_center_oracle(const FinAlgebra& alg, const LinMap& sigma) {
  const std::size_t n = alg.dim();
  // rows: coefficient k of [e_i, lambda]_sigma = sigma(e_i) lambda - lambda e_i
  Mat sys(alg.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat l = alg.left_mult(sigma.col(i));
    const Mat r = alg.right_mult(alg.basis_vec(i));
    const Mat d = l - r;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) sys.at(i * n + k, c) = d.at(k, c);
  }
  return kernel_basis(sys);
}

SigmaCenter sigma_center(const TriAlgebra& t, const AutBlocks& blocks) {
  const Field f = t.field();
  const Subspace za = twisted_center(t.A(), blocks.f);
  const Subspace zb = twisted_center(t.B(), blocks.g);
  const std::size_t ka = za.dim(), kb = zb.dim(), dm = t.dim_m();
  SigmaCenter out;
  std::vector<Vec> gens, graph;
  if (ka + kb > 0) {
    // a m_j - nu(m_j) b = 0
    Mat sys(f, dm * dm, ka + kb);
    for (std::size_t j = 0; j < dm; ++j) {
      const Vec mj = unit_vec(f, dm, j);
      const Vec nmj = blocks.nu * mj;
      for (std::size_t i = 0; i < ka; ++i) {
        const Vec v = t.act_left(za.basis()[i], mj);
        for (std::size_t k = 0; k < dm; ++k) sys.at(j * dm + k, i) = v[k];
      }
      for (std::size_t i = 0; i < kb; ++i) {
        const Vec v = t.act_right(nmj, zb.basis()[i]);
        for (std::size_t k = 0; k < dm; ++k) sys.at(j * dm + k, ka + i) = -v[k];
      }
    }
    const Subspace sol = kernel_basis(sys);
    for (const auto& c : sol.basis()) {
      const Vec a = za.combine(Vec(c.begin(), c.begin() + static_cast<long>(ka)));
      const Vec b = zb.combine(Vec(c.begin() + static_cast<long>(ka), c.end()));
      gens.push_back(t.embed_a(a) + t.embed_b(b));
      graph.push_back(concat(b, a));
    }
  }
  out.z = Subspace::span(f, t.dim(), gens);

  const LinMap sigma = assemble(t, blocks);
  if (out.z != sigma_center_oracle(t.total(), sigma))
    throw TheoremViolation("lemmacenter", "block formula for Z_sigma disagrees with the sigma-commutator kernel");
  for (const auto& z : out.z.basis())
    if (!out.z.contains(sigma * z)) throw TheoremViolation("lemmacenter", "Z_sigma not invariant under sigma");

  if (!t.faithful()) return out;
  const PairingMap eta = PairingMap::from_graph(Subspace::span(f, t.dim_b() + t.dim_a(), graph), t.dim_b(), t.dim_a());
  if (!eta.injective()) throw TheoremViolation("lemmacenter", "eta is not injective");
  for (const auto& b : eta.domain().basis()) {
    const Vec a = eta.apply(b);
    for (std::size_t j = 0; j < dm; ++j) {
      const Vec mj = unit_vec(f, dm, j);
      if (t.act_left(a, mj) != t.act_right(blocks.nu * mj, b)) throw TheoremViolation("lemmacenter", "eta(b) m != nu(m) b");
    }
  }
  out.eta = eta;
  return out;
}

Verdict classify_alpha_beta(const FinAlgebra& alg, AlphaBetaKind kind, const LinMap& f, const LinMap& alpha, const LinMap& beta) {
  check_shape(alg, f, "map");
  check_shape(alg, alpha, "alpha");
  check_shape(alg, beta, "beta");
  if (kind == AlphaBetaKind::Derivation) return derivation_rule(alg, f, alpha, beta);
  return quadratic_rule(alg, f, alpha, beta);
}

Verdict classify_alpha_beta_bilinear(const FinAlgebra& alg, const BilinMap& d, const LinMap& alpha, const LinMap& beta) {
  check_bilin_shape(alg, d);
  check_shape(alg, alpha, "alpha");
  check_shape(alg, beta, "beta");
  return bilinear_rule(alg, d, alpha, beta);
}

LinearReduction alpha_beta_reduce(const FinAlgebra& alg, AlphaBetaKind kind, const LinMap& f, const LinMap& alpha, const LinMap& beta) {
  check_shape(alg, f, "map");
  const LinMap ai = inverse_automorphism(alg, alpha, "alpha");
  inverse_automorphism(alg, beta, "beta");
  LinearReduction out{ai * f, ai * beta};
  const bool before = classify_alpha_beta(alg, kind, f, alpha, beta).holds;
  const LinearKind k = kind == AlphaBetaKind::Derivation ? LinearKind::SigmaDerivation : LinearKind::SigmaCommuting;
  const bool after = classify_linear(alg, k, out.map, out.sigma).holds;
  if (before != after) throw TheoremViolation("alphabeta", "reduction changed the verdict");
  return out;
}

BilinearReduction alpha_beta_reduce(const FinAlgebra& alg, const BilinMap& d, const LinMap& alpha, const LinMap& beta) {
  check_bilin_shape(alg, d);
  const LinMap ai = inverse_automorphism(alg, alpha, "alpha");
  inverse_automorphism(alg, beta, "beta");
  BilinearReduction out{d.compose_left(ai), ai * beta};
  const bool before = classify_alpha_beta_bilinear(alg, d, alpha, beta).holds;
  const bool after = bilinear_rule(alg, out.map, Mat::identity(alg.field(), alg.dim()), out.sigma).holds;
  if (before != after) throw TheoremViolation("alphabeta", "reduction changed the verdict");
  return out;
}

}  // namespace trialg
