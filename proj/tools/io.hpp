#pragma once

#include "trialg/classify.hpp"
#include "trialg/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace trialg::io {

using json = nlohmann::json;

/// One file (or built-in fixture) read during a run.
struct InputRecord {
  std::string role;
  std::string path;
  std::string sha256;
  bool builtin = false;
};

/// Raised for malformed input. Carries the file and the JSON pointer (or
/// line:col for syntax errors) of the offending value.
class InputError : public Error {
 public:
  InputError(ErrorKind kind, const std::string& file, const std::string& where, const std::string& detail);
  const std::string& file() const { return file_; }
  const std::string& where() const { return where_; }

 private:
  std::string file_;
  std::string where_;
};

std::string sha256_hex(const std::string& bytes);

/// Reads and parses a JSON document; syntax errors report line and column.
json read_json_file(const std::filesystem::path& path, const std::string& role, std::vector<InputRecord>& inputs);

// Parsing. `file` is used for diagnostics only; errors thrown by the library
// (NonAssociative, ...) are rethrown as InputError with that file attached.
Field parse_field(const json& j, const std::string& file, const std::string& where);
FinAlgebra parse_algebra(const json& j, const std::string& file);
Bimodule parse_bimodule(const json& j, Field f, const std::string& file);
/// Sub-documents may be inline objects or paths relative to `base`.
TriAlgebra parse_triangular(const json& j, const std::string& file, const std::filesystem::path& base,
                            std::vector<InputRecord>& inputs);
/// Square map on F^dim (or rows x cols when given).
LinMap parse_map(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& file);
BilinMap parse_bilinear(const json& j, Field f, std::size_t dim, const std::string& file);

// Serialization. Scalars are written as strings in lowest terms.
json field_json(Field f);
json scalar_json(const Scalar& s);
json vec_json(const Vec& v);
json algebra_json(const FinAlgebra& alg);
json bimodule_json(const Bimodule& m);
json triangular_json(const TriAlgebra& t);
json map_json(const LinMap& m);
json bilinear_json(const BilinMap& d);
json subspace_json(const Subspace& s, const std::string& kind = "subspace");
/// Basis elements as sparse entries: [k, j, c] for linear kinds (coefficient of
/// e_k in the image of e_j), [i, j, k, c] for bilinear ones.
json map_space_json(const MapSpace& s);
json verdict_json(const Verdict& v);
json report_json(const Report& r);
json pairing_json(const PairingMap& p);

}  // namespace trialg::io
