#include "io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace trialg::io {

namespace {

std::string strip_kind(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

std::string where_suffix(const std::string& where) { return where.empty() ? std::string() : " at " + where; }

[[noreturn]] void fail(const std::string& file, const std::string& where, const std::string& detail) {
  throw InputError(ErrorKind::Parse, file, where, detail);
}

const json& member(const json& j, const char* key, const std::string& file, const std::string& where) {
  if (!j.is_object()) fail(file, where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(file, where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t read_count(const json& v, const std::string& file, const std::string& where) {
  if (!v.is_number_unsigned()) fail(file, where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::size_t read_index(const json& v, std::size_t bound, const std::string& file, const std::string& where) {
  const std::size_t i = read_count(v, file, where);
  if (i >= bound) fail(file, where, "index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
  return i;
}

Scalar read_scalar(const json& v, Field f, const std::string& file, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::parse(f, v.dump());
  } catch (const Error& e) {
    throw InputError(e.kind(), file, where, strip_kind(e));
  }
  fail(file, where, "expected a scalar (string such as \"-3/4\" or an integer)");
}

Vec read_vec(const json& v, Field f, std::size_t n, const std::string& file, const std::string& where) {
  if (!v.is_array()) fail(file, where, "expected an array");
  if (v.size() != n) fail(file, where, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vec out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_scalar(v[i], f, file, where + "/" + std::to_string(i)));
  return out;
}

// Entries of a sparse tensor: [idx..., coeff]. Duplicated index tuples are rejected.
template <std::size_t N>
std::vector<std::pair<std::array<std::size_t, N>, Scalar>> read_entries(const json& v,
                                                                        const std::array<std::size_t, N>& bounds,
                                                                        Field f, const std::string& file,
                                                                        const std::string& where) {
  if (!v.is_array()) fail(file, where, "expected an array of entries");
  std::vector<std::pair<std::array<std::size_t, N>, Scalar>> out;
  std::set<std::array<std::size_t, N>> seen;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const std::string at = where + "/" + std::to_string(r);
    const json& e = v[r];
    if (!e.is_array() || e.size() != N + 1) fail(file, at, "expected an entry of " + std::to_string(N + 1) + " items");
    std::array<std::size_t, N> idx{};
    for (std::size_t k = 0; k < N; ++k) idx[k] = read_index(e[k], bounds[k], file, at + "/" + std::to_string(k));
    if (!seen.insert(idx).second) fail(file, at, "duplicate entry");
    out.emplace_back(idx, read_scalar(e[N], f, file, at + "/" + std::to_string(N)));
  }
  return out;
}

std::vector<std::string> read_names(const json& j, std::size_t n, const char* prefix, const std::string& file) {
  std::vector<std::string> names;
  const auto it = j.find("basis");
  if (it == j.end()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
  }
  if (!it->is_array() || it->size() != n) fail(file, "/basis", "expected " + std::to_string(n) + " basis names");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(*it)[i].is_string()) fail(file, "/basis/" + std::to_string(i), "expected a string");
    names.push_back((*it)[i].get<std::string>());
  }
  return names;
}

void check_optional_field(const json& j, Field f, const std::string& file) {
  const auto it = j.find("field");
  if (it == j.end()) return;
  const Field declared = parse_field(*it, file, "/field");
  if (declared != f) {
    throw InputError(ErrorKind::FieldMismatch, file, "/field",
                     "declared " + declared.to_string() + " but the algebra is over " + f.to_string());
  }
}

std::pair<std::string, json> load_part(const json& j, const char* key, const std::string& file,
                                       const std::filesystem::path& base, std::vector<InputRecord>& inputs) {
  const json& v = member(j, key, file, "");
  if (v.is_object()) return {file + "#/" + key, v};
  if (v.is_string()) {
    const std::filesystem::path p = base / v.get<std::string>();
    return {p.string(), read_json_file(p, key, inputs)};
  }
  fail(file, std::string("/") + key, "expected an object or a path");
}

}  // namespace

InputError::InputError(ErrorKind kind, const std::string& file, const std::string& where, const std::string& detail)
    : Error(kind, file + where_suffix(where) + ": " + detail), file_(file), where_(where) {}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InvalidArgument, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

json read_json_file(const std::filesystem::path& path, const std::string& role, std::vector<InputRecord>& inputs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorKind::InvalidArgument, path.string(), "", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  inputs.push_back({role, path.string(), sha256_hex(text), false});
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(ErrorKind::Parse, path.string(), "line " + std::to_string(line) + ":" + std::to_string(col),
                     "malformed JSON");
  }
}

Field parse_field(const json& j, const std::string& file, const std::string& where) {
  const std::string kind_at = where + "/kind";
  const json& kind = member(j, "kind", file, where);
  if (!kind.is_string()) fail(file, kind_at, "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "rational") return Field::rational();
  if (k == "prime") {
    const std::uint64_t p = read_count(member(j, "p", file, where), file, where + "/p");
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      throw InputError(e.kind(), file, where + "/p", strip_kind(e));
    }
  }
  fail(file, kind_at, "unknown field kind \"" + k + "\" (rational or prime)");
}

FinAlgebra parse_algebra(const json& j, const std::string& file) {
  const Field f = parse_field(member(j, "field", file, ""), file, "/field");
  const std::size_t n = read_count(member(j, "dim", file, ""), file, "/dim");
  if (n == 0) fail(file, "/dim", "dimension must be positive");
  auto names = read_names(j, n, "e", file);
  Vec unit = read_vec(member(j, "unit", file, ""), f, n, file, "/unit");
  std::vector<Vec> products(n * n, zero_vec(f, n));
  for (auto& [idx, c] : read_entries<3>(member(j, "mul", file, ""), {n, n, n}, f, file, "/mul")) {
    products[idx[0] * n + idx[1]][idx[2]] = c;
  }
  try {
    return FinAlgebra::create(f, std::move(names), std::move(products), std::move(unit));
  } catch (const Error& e) {
    throw InputError(e.kind(), file, "", strip_kind(e));
  }
}

Bimodule parse_bimodule(const json& j, Field f, const std::string& file) {
  Bimodule m;
  m.field = f;
  m.dim_a = read_count(member(j, "dimA", file, ""), file, "/dimA");
  m.dim_m = read_count(member(j, "dimM", file, ""), file, "/dimM");
  m.dim_b = read_count(member(j, "dimB", file, ""), file, "/dimB");
  m.names = read_names(j, m.dim_m, "m", file);
  m.left.assign(m.dim_a * m.dim_m, zero_vec(f, m.dim_m));
  m.right.assign(m.dim_m * m.dim_b, zero_vec(f, m.dim_m));
  for (auto& [idx, c] : read_entries<3>(member(j, "left", file, ""), {m.dim_a, m.dim_m, m.dim_m}, f, file, "/left")) {
    m.left[idx[0] * m.dim_m + idx[1]][idx[2]] = c;
  }
  for (auto& [idx, c] : read_entries<3>(member(j, "right", file, ""), {m.dim_m, m.dim_b, m.dim_m}, f, file, "/right")) {
    m.right[idx[0] * m.dim_b + idx[1]][idx[2]] = c;
  }
  return m;
}

TriAlgebra parse_triangular(const json& j, const std::string& file, const std::filesystem::path& base,
                            std::vector<InputRecord>& inputs) {
  const auto [a_file, a_doc] = load_part(j, "A", file, base, inputs);
  const auto [m_file, m_doc] = load_part(j, "M", file, base, inputs);
  const auto [b_file, b_doc] = load_part(j, "B", file, base, inputs);
  FinAlgebra a = parse_algebra(a_doc, a_file);
  FinAlgebra b = parse_algebra(b_doc, b_file);
  if (a.field() != b.field()) {
    throw InputError(ErrorKind::FieldMismatch, b_file, "/field",
                     "B is over " + b.field().to_string() + " but A is over " + a.field().to_string());
  }
  Bimodule m = parse_bimodule(m_doc, a.field(), m_file);
  if (m.dim_a != a.dim()) fail(m_file, "/dimA", "dimA = " + std::to_string(m.dim_a) + " but A has dimension " + std::to_string(a.dim()));
  if (m.dim_b != b.dim()) fail(m_file, "/dimB", "dimB = " + std::to_string(m.dim_b) + " but B has dimension " + std::to_string(b.dim()));
  try {
    return build_triangular(std::move(a), std::move(m), std::move(b));
  } catch (const Error& e) {
    throw InputError(e.kind(), m_file, "", strip_kind(e));
  }
}

LinMap parse_map(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& file) {
  check_optional_field(j, f, file);
  if (const auto it = j.find("convention"); it != j.end() && *it != "image-in-columns") {
    fail(file, "/convention", "only \"image-in-columns\" is supported");
  }
  const json& mat = member(j, "matrix", file, "");
  if (!mat.is_array() || mat.size() != rows) {
    fail(file, "/matrix", "expected " + std::to_string(rows) + " rows");
  }
  std::vector<Vec> r;
  for (std::size_t k = 0; k < rows; ++k) r.push_back(read_vec(mat[k], f, cols, file, "/matrix/" + std::to_string(k)));
  return Mat::from_rows(f, cols, r);
}

BilinMap parse_bilinear(const json& j, Field f, std::size_t dim, const std::string& file) {
  check_optional_field(j, f, file);
  BilinMap d = BilinMap::zero(f, dim);
  for (auto& [idx, c] : read_entries<3>(member(j, "tensor", file, ""), {dim, dim, dim}, f, file, "/tensor")) {
    d.value(idx[0], idx[1])[idx[2]] = c;
  }
  return d;
}

json field_json(Field f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.characteristic()}};
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

json algebra_json(const FinAlgebra& alg) {
  const std::size_t n = alg.dim();
  json mul = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) mul.push_back({i, j, k, scalar_json(p[k])});
      }
    }
  }
  return {{"field", field_json(alg.field())}, {"dim", n}, {"basis", alg.names()}, {"unit", vec_json(alg.unit())},
          {"mul", mul}};
}

json bimodule_json(const Bimodule& m) {
  json left = json::array(), right = json::array();
  for (std::size_t a = 0; a < m.dim_a; ++a) {
    for (std::size_t i = 0; i < m.dim_m; ++i) {
      const Vec& v = m.left[a * m.dim_m + i];
      for (std::size_t k = 0; k < m.dim_m; ++k) {
        if (!v[k].is_zero()) left.push_back({a, i, k, scalar_json(v[k])});
      }
    }
  }
  for (std::size_t i = 0; i < m.dim_m; ++i) {
    for (std::size_t b = 0; b < m.dim_b; ++b) {
      const Vec& v = m.right[i * m.dim_b + b];
      for (std::size_t k = 0; k < m.dim_m; ++k) {
        if (!v[k].is_zero()) right.push_back({i, b, k, scalar_json(v[k])});
      }
    }
  }
  json out = {{"dimA", m.dim_a}, {"dimM", m.dim_m}, {"dimB", m.dim_b}, {"left", left}, {"right", right}};
  if (!m.names.empty()) out["basis"] = m.names;
  return out;
}

json triangular_json(const TriAlgebra& t) {
  return {{"A", algebra_json(t.A())}, {"M", bimodule_json(t.M())}, {"B", algebra_json(t.B())}};
}

json map_json(const LinMap& m) {
  json rows = json::array();
  for (std::size_t k = 0; k < m.rows(); ++k) rows.push_back(vec_json(m.row(k)));
  return {{"convention", "image-in-columns"}, {"field", field_json(m.field())}, {"matrix", rows},
          {"shape", {m.rows(), m.cols()}}};
}

json bilinear_json(const BilinMap& d) {
  json tensor = json::array();
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) {
      const Vec& v = d.value(i, j);
      for (std::size_t k = 0; k < d.dim(); ++k) {
        if (!v[k].is_zero()) tensor.push_back({i, j, k, scalar_json(v[k])});
      }
    }
  }
  return {{"dim", d.dim()}, {"field", field_json(d.field())}, {"tensor", tensor}};
}

json subspace_json(const Subspace& s, const std::string& kind) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vec_json(v));
  return {{"kind", kind}, {"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

json map_space_json(const MapSpace& s) {
  const std::size_t n = s.alg_dim;
  json basis = json::array();
  if (is_bilinear(s.kind)) {
    for (const auto& d : s.bilinear_basis()) basis.push_back(bilinear_json(d)["tensor"]);
  } else {
    for (const auto& f : s.linear_basis()) {
      json entries = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!f.at(k, j).is_zero()) entries.push_back({k, j, scalar_json(f.at(k, j))});
        }
      }
      basis.push_back(entries);
    }
  }
  json out = {{"kind", kind_name(s.kind)},
              {"alg_dim", n},
              {"ambient_dim", s.space.ambient_dim()},
              {"dim", s.dim()},
              {"basis", basis}};
  out["flattening"] = is_bilinear(s.kind) ? "[i,j,k,c]: c = coefficient of e_k in D(e_i,e_j); flat index (i*n+j)*n+k"
                                          : "[k,j,c]: c = coefficient of e_k in f(e_j); flat index k*n+j";
  return out;
}

json verdict_json(const Verdict& v) {
  json out = {{"holds", v.holds}};
  if (!v.holds) {
    out["witness"] = v.witness;
    out["lhs"] = vec_json(v.lhs);
    out["rhs"] = vec_json(v.rhs);
    if (!v.point.empty()) out["point"] = vec_json(v.point);
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json report_json(const Report& r) {
  json hyps = json::array();
  for (const auto& c : r.hypotheses) {
    hyps.push_back({{"name", c.name}, {"status", tri_name(c.status)}, {"evidence", c.evidence}});
  }
  json wit = json::array();
  for (const auto& w : r.witnesses) wit.push_back({{"name", w.name}, {"value", vec_json(w.value)}});
  return {{"theorem", r.theorem}, {"hypotheses", hyps}, {"verdict", r.verdict}, {"witnesses", wit},
          {"violations", r.violations}};
}

json pairing_json(const PairingMap& p) {
  json images = json::array();
  for (const auto& v : p.images()) images.push_back(vec_json(v));
  return {{"domain", subspace_json(p.domain())}, {"images", images}};
}

}  // namespace trialg::io
