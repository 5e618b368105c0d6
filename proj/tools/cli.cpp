#include "cli.hpp"

#include "io.hpp"
#include "trialg/fixtures.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#ifndef TRIALG_VERSION
#define TRIALG_VERSION "0.0.0"
#endif

namespace trialg::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

// Everything one invocation accumulates before it is printed.
struct Run {
  std::string command;
  std::vector<io::InputRecord> inputs;
  json verdicts = json::object();
  json emitted = json::object();
  json reports = json::array();
  std::optional<Field> field;
};

// What a T.json / alg.json argument resolved to.
struct Target {
  std::string arg;
  std::string fixture;  // "F1".."F4" when built in
  std::optional<TriAlgebra> tri;
  FinAlgebra alg;  // tri->total() for triangular inputs

  const TriAlgebra& triangular() const {
    if (!tri) throw Error(ErrorKind::InvalidArgument, arg + ": expected a triangular algebra file");
    return *tri;
  }
};

LinMap identity_of(const FinAlgebra& alg) { return Mat::identity(alg.field(), alg.dim()); }

LinMap d2() {
  const FinAlgebra f2 = fixture_f2();
  return identity_of(f2) - sigma2();
}

// D(u, v) = d(u) d(v) with d = Id - sigma2
BilinMap bid2() {
  const FinAlgebra f2 = fixture_f2();
  const LinMap d = d2();
  std::vector<Vec> values;
  for (std::size_t i = 0; i < f2.dim(); ++i) {
    for (std::size_t j = 0; j < f2.dim(); ++j) values.push_back(f2.mul(d.col(i), d.col(j)));
  }
  return BilinMap::from_values(f2.field(), f2.dim(), std::move(values));
}

std::map<std::string, LinMap> fixture_linear_maps(const std::string& fixture) {
  if (fixture == "F1") return {{"sigma1", sigma1()}, {"theta1", theta1()}};
  if (fixture == "F2") return {{"sigma2", sigma2()}, {"d2", d2()}};
  return {};
}

std::map<std::string, BilinMap> fixture_bilinear_maps(const std::string& fixture) {
  if (fixture == "F2") return {{"bid2", bid2()}};
  return {};
}

bool is_fixture_name(const std::string& s) { return s == "F1" || s == "F2" || s == "F3" || s == "F4"; }

void record_builtin(Run& run, const std::string& role, const std::string& name, const json& canonical) {
  run.inputs.push_back({role, name, io::sha256_hex(canonical.dump()), true});
}

Target load_target(Run& run, const std::string& arg) {
  Target t;
  t.arg = arg;
  if (is_fixture_name(arg) && !fs::exists(arg)) {
    t.fixture = arg;
    if (arg == "F2") {
      t.alg = fixture_f2();
      record_builtin(run, "target", arg, io::algebra_json(t.alg));
    } else {
      t.tri = arg == "F1" ? fixture_f1() : arg == "F3" ? fixture_f3() : fixture_f4();
      t.alg = t.tri->total();
      record_builtin(run, "target", arg, io::triangular_json(*t.tri));
    }
  } else {
    const json doc = io::read_json_file(arg, "target", run.inputs);
    if (doc.is_object() && doc.contains("A")) {
      t.tri = io::parse_triangular(doc, arg, fs::path(arg).parent_path(), run.inputs);
      t.alg = t.tri->total();
    } else if (doc.is_object() && doc.contains("mul")) {
      t.alg = io::parse_algebra(doc, arg);
    } else {
      throw io::InputError(ErrorKind::Parse, arg, "", "neither an algebra (\"mul\") nor a triangular (\"A\", \"M\", \"B\") file");
    }
  }
  run.field = t.alg.field();
  return t;
}

LinMap load_map(Run& run, const Target& t, const std::string& role, const std::string& arg) {
  if (!fs::exists(arg)) {
    if (arg == "identity") {
      record_builtin(run, role, arg, io::map_json(identity_of(t.alg)));
      return identity_of(t.alg);
    }
    const auto builtins = fixture_linear_maps(t.fixture);
    if (const auto it = builtins.find(arg); it != builtins.end()) {
      record_builtin(run, role, arg, io::map_json(it->second));
      return it->second;
    }
  }
  const json doc = io::read_json_file(arg, role, run.inputs);
  return io::parse_map(doc, t.alg.field(), t.alg.dim(), t.alg.dim(), arg);
}

BilinMap load_bilinear(Run& run, const Target& t, const std::string& role, const std::string& arg) {
  if (!fs::exists(arg)) {
    const auto builtins = fixture_bilinear_maps(t.fixture);
    if (const auto it = builtins.find(arg); it != builtins.end()) {
      record_builtin(run, role, arg, io::bilinear_json(it->second));
      return it->second;
    }
  }
  const json doc = io::read_json_file(arg, role, run.inputs);
  return io::parse_bilinear(doc, t.alg.field(), t.alg.dim(), arg);
}

SpaceKind parse_kind(const std::string& s) {
  for (SpaceKind k : {SpaceKind::Derivation, SpaceKind::SigmaDerivation, SpaceKind::Biderivation,
                      SpaceKind::SigmaBiderivation, SpaceKind::SigmaCommuting}) {
    if (s == kind_name(k)) return k;
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown kind '" + s + "' (derivation, sigma_derivation, biderivation, sigma_biderivation, sigma_commuting)");
}

json membership_json(const Subspace& space, const Vec& flat) {
  const auto c = space.coords(flat);
  json out = {{"member", c.has_value()}};
  if (c) out["coords"] = io::vec_json(*c);
  return out;
}

// --- commands -------------------------------------------------------------------

void cmd_validate(Run& run, const std::string& file) {
  const Target t = load_target(run, file);
  json summary = {{"kind", t.tri ? "triangular" : "algebra"},
                  {"dim", t.alg.dim()},
                  {"field", io::field_json(t.alg.field())},
                  {"commutative", t.alg.is_commutative()}};
  if (t.tri) {
    summary["dims"] = {{"A", t.tri->dim_a()}, {"M", t.tri->dim_m()}, {"B", t.tri->dim_b()}};
    run.verdicts["left_faithful"] = t.tri->left_faithful();
    run.verdicts["right_faithful"] = t.tri->right_faithful();
  }
  run.verdicts["valid"] = true;
  run.emitted["summary"] = summary;
}

void cmd_triangular_build(Run& run, const std::string& file) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  run.emitted["total"] = io::algebra_json(t.total());
  run.emitted["blocks"] = {{"A", {{"offset", 0}, {"dim", t.dim_a()}}},
                           {"M", {{"offset", t.m_offset()}, {"dim", t.dim_m()}}},
                           {"B", {{"offset", t.b_offset()}, {"dim", t.dim_b()}}}};
  run.verdicts["left_faithful"] = t.left_faithful();
  run.verdicts["right_faithful"] = t.right_faithful();
}

void cmd_center(Run& run, const std::string& file) {
  const Target t = load_target(run, file);
  const Subspace oracle = center(t.alg);
  if (t.tri) {
    const Subspace z = center_T(*t.tri);
    if (z != oracle) throw TheoremViolation("center_T", "block formula differs from the commutant kernel");
    run.verdicts["oracle_agrees"] = true;
  }
  run.verdicts["dim"] = oracle.dim();
  run.emitted["center"] = io::subspace_json(oracle);
}

void cmd_sigma_center(Run& run, const std::string& file, const std::string& sigma_arg) {
  const Target t = load_target(run, file);
  const LinMap sigma = load_map(run, t, "sigma", sigma_arg);
  if (!is_automorphism(t.alg, sigma)) throw Error(ErrorKind::SigmaNotAutomorphism, sigma_arg);
  const Subspace oracle = sigma_center_oracle(t.alg, sigma);
  const bool blockwise = t.tri && is_block_preserving(*t.tri, sigma);
  run.verdicts["block_preserving"] = blockwise;
  if (blockwise) {
    const SigmaCenter sc = sigma_center(*t.tri, block_decompose(*t.tri, sigma));
    if (sc.z != oracle) throw TheoremViolation("sigma_center", "block formula differs from the sigma-commutant kernel");
    run.verdicts["oracle_agrees"] = true;
    if (sc.eta) run.emitted["eta"] = io::pairing_json(*sc.eta);
  }
  run.verdicts["dim"] = oracle.dim();
  run.emitted["z_sigma"] = io::subspace_json(oracle);
}

void cmd_radical(Run& run, const std::string& file) {
  const Target t = load_target(run, file);
  const Subspace r = radical(t.alg);
  json dims = json::array();
  for (const auto& s : ideal_powers(t.alg, r)) dims.push_back(s.dim());
  run.verdicts["dim"] = r.dim();
  run.verdicts["power_dims"] = dims;
  run.emitted["radical"] = io::subspace_json(r);
}

void cmd_nil_radical(Run& run, const std::string& file) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const Subspace n = nil_radical_T(t);
  run.verdicts["dim"] = n.dim();
  run.verdicts["equals_m"] = n == t.block_m();
  run.emitted["nil_radical"] = io::subspace_json(n);
}

void cmd_solve(Run& run, const std::string& kind_arg, const std::string& file, const std::string& sigma_arg,
               const std::vector<std::string>& members) {
  const SpaceKind kind = parse_kind(kind_arg);
  const Target t = load_target(run, file);
  std::optional<LinMap> sigma;
  if (!sigma_arg.empty()) sigma = load_map(run, t, "sigma", sigma_arg);
  const MapSpace space = solve_space(t.alg, kind, sigma);
  run.verdicts["dim"] = space.dim();
  run.emitted["space"] = io::map_space_json(space);

  json membership = json::object();
  if (is_bilinear(kind)) {
    for (const auto& [name, d] : fixture_bilinear_maps(t.fixture)) membership[name] = membership_json(space.space, d.flatten());
    for (const auto& m : members) membership[m] = membership_json(space.space, load_bilinear(run, t, "member", m).flatten());
  } else {
    for (const auto& [name, f] : fixture_linear_maps(t.fixture)) membership[name] = membership_json(space.space, flatten(f));
    for (const auto& m : members) membership[m] = membership_json(space.space, flatten(load_map(run, t, "member", m)));
  }
  if (!membership.empty()) run.verdicts["membership"] = membership;
}

void cmd_split(Run& run, const std::string& file, const std::string& sigma_arg, const std::string& bid_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const LinMap sigma = load_map(run, target, "sigma", sigma_arg);
  const BilinMap d = load_bilinear(run, target, "bid", bid_arg);
  const ExtremalSplit es = extremal_split(t, sigma, d);
  run.verdicts["recombines"] = es.psi + es.d0 == d;
  run.verdicts["d0_pp_zero"] = is_zero(es.d0.apply(t.p(), t.p()));
  run.emitted["x0"] = io::vec_json(es.x0);
  run.emitted["psi"] = io::bilinear_json(es.psi);
  run.emitted["d0"] = io::bilinear_json(es.d0);
}

void cmd_inner_witness(Run& run, const std::string& file, const std::string& sigma_arg, const std::string& bid_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const LinMap sigma = load_map(run, target, "sigma", sigma_arg);
  const BilinMap d = load_bilinear(run, target, "bid", bid_arg);
  const ExtremalSplit es = extremal_split(t, sigma, d);
  run.emitted["x0"] = io::vec_json(es.x0);
  const auto lambda = inner_biderivation_witness(t, sigma, es.d0);
  run.verdicts["d0_inner"] = lambda.has_value();
  if (lambda) run.emitted["lambda"] = io::vec_json(*lambda);
  if (t.faithful() && is_block_preserving(t, sigma)) {
    run.reports.push_back(io::report_json(innercond_hypotheses(t, block_decompose(t, sigma))));
  }
}

void cmd_commuting_blocks(Run& run, const std::string& file, const std::string& sigma_arg, const std::string& map_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const LinMap sigma = load_map(run, target, "sigma", sigma_arg);
  const LinMap theta = load_map(run, target, "map", map_arg);
  const AutBlocks blocks = block_decompose(t, sigma);
  const CommutingBlocks cb = commuting_blocks(t, blocks, theta);
  run.verdicts["reassembles"] = reassemble(t, cb, blocks) == theta;
  run.emitted["delta1"] = io::map_json(cb.delta1);
  run.emitted["delta2"] = io::map_json(cb.delta2);
  run.emitted["delta3"] = io::map_json(cb.delta3);
  run.emitted["mu1"] = io::map_json(cb.mu1);
  run.emitted["mu2"] = io::map_json(cb.mu2);
  run.emitted["mu3"] = io::map_json(cb.mu3);
}

void cmd_properness(Run& run, const std::string& file, const std::string& sigma_arg, const std::string& map_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const LinMap sigma = load_map(run, target, "sigma", sigma_arg);
  const LinMap theta = load_map(run, target, "map", map_arg);
  const AutBlocks blocks = block_decompose(t, sigma);
  const Properness pr = properness(t, blocks, theta);
  run.verdicts["criterion_ii"] = pr.criterion_ii;
  run.verdicts["criterion_iii"] = pr.criterion_iii;
  run.verdicts["direct"] = pr.direct;
  if (!pr.failed.empty()) run.verdicts["failed"] = pr.failed;
  if (pr.witness) {
    run.emitted["lambda"] = io::vec_json(pr.witness->lambda);
    run.emitted["omega"] = io::map_json(pr.witness->omega);
  }
  run.reports.push_back(io::report_json(caractcomm_hypotheses(t, blocks)));
}

void cmd_endo_classify(Run& run, const std::string& file, const std::string& map_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  const LinMap phi = load_map(run, target, "map", map_arg);
  const EndoAnalysis ea = endo_blocks(t, phi);
  run.verdicts["m_preserving"] = ea.m_preserving;
  run.verdicts["bijective"] = ea.bijective;
  run.verdicts["anti_partible"] = ea.anti_partible;
  run.reports.push_back(io::report_json(ea.report));
  const EndoBlocks& b = ea.blocks;
  run.emitted["blocks"] = {{"chi1", io::map_json(b.chi1)},     {"chi2", io::map_json(b.chi2)},
                           {"chi3", io::map_json(b.chi3)},     {"gamma1", io::map_json(b.gamma1)},
                           {"gamma2", io::map_json(b.gamma2)}, {"gamma3", io::map_json(b.gamma3)},
                           {"h", io::map_json(b.h)}};
  if (ea.m_preserving) {
    const MonoEpi me = endo_mono_epi(t, ea);
    run.verdicts["mono_epi"] = {{"m1", me.m1},
                                {"m2", me.m2},
                                {"m3", me.m3},
                                {"e1", me.e1},
                                {"e2_sum", me.e2_sum},
                                {"e3_sum", me.e3_sum},
                                {"e2_literal", me.e2_literal},
                                {"e3_literal", me.e3_literal},
                                {"mono", me.mono},
                                {"epi", me.epi},
                                {"rank_injective", me.rank_injective},
                                {"rank_surjective", me.rank_surjective}};
  }
  if (ea.bijective) {
    const auto pw = partible_witness(t, phi);
    run.verdicts["partible"] = pw.has_value();
    if (pw) {
      run.emitted["z"] = io::vec_json(pw->z);
      run.emitted["sigma_bar"] = io::map_json(pw->sigma_bar);
    }
    if (ea.m_preserving) {
      const IdealSplit split = ideal_split(t, phi);
      run.emitted["ideal_i"] = io::subspace_json(split.i);
      run.emitted["ideal_j"] = io::subspace_json(split.j);
    }
  }
}

void cmd_partible(Run& run, const std::string& file, const std::string& sigma_arg) {
  const Target target = load_target(run, file);
  const TriAlgebra& t = target.triangular();
  run.reports.push_back(io::report_json(partibility_sufficient(t)));
  if (sigma_arg.empty()) return;
  const LinMap sigma = load_map(run, target, "sigma", sigma_arg);
  const auto pw = partible_witness(t, sigma);
  run.verdicts["partible"] = pw.has_value();
  if (pw) {
    run.emitted["z"] = io::vec_json(pw->z);
    run.emitted["sigma_bar"] = io::map_json(pw->sigma_bar);
  }
}

void write_file(Run& run, const fs::path& path, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  run.emitted["files"].push_back({{"path", path.string()}, {"sha256", io::sha256_hex(text)}});
}

void cmd_fixtures_emit(Run& run, const std::string& name, const std::string& dir) {
  if (!is_fixture_name(name)) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "' (F1, F2, F3, F4)");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::InvalidArgument, "cannot create " + dir + ": " + ec.message());
  run.emitted["files"] = json::array();
  const fs::path base(dir);
  if (name == "F2") {
    write_file(run, base / "alg.json", io::algebra_json(fixture_f2()));
  } else {
    const TriAlgebra t = name == "F1" ? fixture_f1() : name == "F3" ? fixture_f3() : fixture_f4();
    write_file(run, base / "T.json", io::triangular_json(t));
  }
  for (const auto& [map_name, f] : fixture_linear_maps(name)) write_file(run, base / (map_name + ".json"), io::map_json(f));
  for (const auto& [map_name, d] : fixture_bilinear_maps(name)) write_file(run, base / (map_name + ".json"), io::bilinear_json(d));
}

json envelope(const Run& run) {
  json inputs = json::array();
  for (const auto& in : run.inputs) {
    inputs.push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}, {"builtin", in.builtin}});
  }
  json out = {{"command", run.command}, {"toolkit_version", TRIALG_VERSION}, {"inputs", inputs}};
  if (run.field) out["field"] = io::field_json(*run.field);
  return out;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact toolkit for triangular algebras Trian(A, M, B) over Q and F_p", "trialg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TRIALG_VERSION);

  Run state;
  std::function<void()> action;
  std::string file, sigma_arg, map_arg, bid_arg, kind_arg, fixture_arg, dir_arg;
  std::vector<std::string> members;

  auto target_cmd = [&](const char* name, const char* help, CLI::App* parent = nullptr) {
    CLI::App* sub = (parent ? parent : &app)->add_subcommand(name, help);
    sub->add_option("file", file, "algebra/triangular JSON file, or F1..F4")->required();
    return sub;
  };

  auto* validate = target_cmd("validate", "Check an algebra or triangular file");
  validate->callback([&] { action = [&] { cmd_validate(state, file); }; });

  auto* tri = app.add_subcommand("triangular", "Triangular algebra tools")->require_subcommand(1);
  target_cmd("build", "Assemble the total algebra", tri)->callback([&] {
    action = [&] { cmd_triangular_build(state, file); };
  });

  target_cmd("center", "Center, cross-checked against the commutant kernel")->callback([&] {
    action = [&] { cmd_center(state, file); };
  });

  auto* sc = target_cmd("sigma-center", "sigma-center Z_sigma");
  sc->add_option("--sigma", sigma_arg, "automorphism map file")->required();
  sc->callback([&] { action = [&] { cmd_sigma_center(state, file, sigma_arg); }; });

  target_cmd("radical", "Jacobson radical")->callback([&] { action = [&] { cmd_radical(state, file); }; });
  target_cmd("nil-radical", "rad(A) + M + rad(B)")->callback([&] { action = [&] { cmd_nil_radical(state, file); }; });

  auto* solve = app.add_subcommand("solve", "Solve for a complete space of maps");
  solve->add_option("kind", kind_arg, "derivation|sigma_derivation|biderivation|sigma_biderivation|sigma_commuting")
      ->required();
  solve->add_option("file", file, "algebra/triangular JSON file, or F1..F4")->required();
  solve->add_option("--sigma", sigma_arg, "automorphism map file");
  solve->add_option("--member", members, "map file whose membership is reported");
  solve->callback([&] { action = [&] { cmd_solve(state, kind_arg, file, sigma_arg, members); }; });

  auto* split = target_cmd("split-biderivation", "D = psi_{D(p,p)} + D0");
  split->add_option("--sigma", sigma_arg)->required();
  split->add_option("--bid", bid_arg, "bilinear map file")->required();
  split->callback([&] { action = [&] { cmd_split(state, file, sigma_arg, bid_arg); }; });

  auto* inner = target_cmd("inner-witness", "lambda with D0 = lambda [x, y]");
  inner->add_option("--sigma", sigma_arg)->required();
  inner->add_option("--bid", bid_arg, "bilinear map file")->required();
  inner->callback([&] { action = [&] { cmd_inner_witness(state, file, sigma_arg, bid_arg); }; });

  auto* cblocks = target_cmd("commuting-blocks", "Block form of a sigma-commuting map");
  cblocks->add_option("--sigma", sigma_arg)->required();
  cblocks->add_option("--map", map_arg, "sigma-commuting map file")->required();
  cblocks->callback([&] { action = [&] { cmd_commuting_blocks(state, file, sigma_arg, map_arg); }; });

  auto* proper = target_cmd("properness", "Is Theta = lambda x + Omega(x)?");
  proper->add_option("--sigma", sigma_arg)->required();
  proper->add_option("--map", map_arg, "sigma-commuting map file")->required();
  proper->callback([&] { action = [&] { cmd_properness(state, file, sigma_arg, map_arg); }; });

  auto* endo = app.add_subcommand("endo", "Endomorphism tools")->require_subcommand(1);
  auto* endo_classify = target_cmd("classify", "Block analysis of an endomorphism", endo);
  endo_classify->add_option("--map", map_arg, "endomorphism map file")->required();
  endo_classify->callback([&] { action = [&] { cmd_endo_classify(state, file, map_arg); }; });

  auto* part = target_cmd("partible", "Partibility conditions and witness");
  part->add_option("--sigma", sigma_arg, "automorphism map file");
  part->callback([&] { action = [&] { cmd_partible(state, file, sigma_arg); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Built-in fixtures")->require_subcommand(1);
  auto* emit = fixtures->add_subcommand("emit", "Write the canonical fixture files");
  emit->add_option("name", fixture_arg, "F1, F2, F3 or F4")->required();
  emit->add_option("dir", dir_arg, "output directory")->required();
  emit->callback([&] { action = [&] { cmd_fixtures_emit(state, fixture_arg, dir_arg); }; });

  Outcome outcome;
  std::vector<std::string> argv_store{"trialg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    outcome.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  for (const auto* sub = &app; sub;) {
    const auto subs = sub->get_subcommands();
    if (subs.empty()) break;
    if (!state.command.empty()) state.command += " ";
    state.command += subs.front()->get_name();
    sub = subs.front();
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  try {
    action();
    report = envelope(state);
    report["status"] = "ok";
    report["verdicts"] = state.verdicts;
    report["emitted"] = state.emitted;
    report["reports"] = state.reports;
  } catch (const TheoremViolation& e) {
    report = envelope(state);
    report["status"] = "finding";
    report["finding"] = {{"theorem", e.theorem()}, {"message", e.what()}};
    outcome.exit_code = 2;
    outcome.err = e.what();
  } catch (const io::InputError& e) {
    report = envelope(state);
    report["status"] = "input_error";
    report["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}, {"file", e.file()}};
    if (!e.where().empty()) report["error"]["where"] = e.where();
    outcome.exit_code = 1;
    outcome.err = e.what();
  } catch (const Error& e) {
    report = envelope(state);
    report["status"] = "input_error";
    report["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    outcome.exit_code = 1;
    outcome.err = e.what();
  }
  // Off by default: a wall-clock field would break byte-identical reports.
  if (const char* timing = std::getenv("TRIALG_TIMING"); timing && std::string(timing) == "1") {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report["timing"] = {{"wall_us", us.count()}};
  }
  outcome.out = report.dump(2) + "\n";
  if (!outcome.err.empty()) outcome.err += "\n";
  return outcome;
}

}  // namespace trialg::cli
