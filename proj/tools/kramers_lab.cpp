// kramers_lab: operator-algebra CLI for degeneracy certificates, Kramers
// verification, seeded ensembles, and spin time-reversal solves. All
// reports are JSON on stdout; errors are single-line JSON on stderr.
// Exit codes: 0 success, 1 hypothesis/validation failure, 2 I/O or format.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "klab/json_io.hpp"
#include "klab/kramers.hpp"
#include "klab/spin.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace klab;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open output file: " + path);
  f << bytes;
}

json parse_json(const std::string& bytes, const std::string& what) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON in " + what);
  return j;
}

struct Cli {
  ToleranceConfig tol;
  std::string out = "-";

  RunManifest manifest(const std::string& command) const {
    RunManifest m;
    m.command = command;
    m.tolerances = tol;
    m.version = kVersion;
    return m;
  }
};

void emit(const Cli& cli, json report) {
  write_output(cli.out, report.dump() + "\n");
}

Mat load_matrix(const std::string& path, RunManifest& m) {
  const std::string bytes = read_input(path);
  m.input_digests[path] = content_digest(bytes);
  return matrix_from_json(parse_json(bytes, path));
}

AntiunitaryOp load_antiunitary(const std::string& path, RunManifest& m) {
  const std::string bytes = read_input(path);
  m.input_digests[path] = content_digest(bytes);
  return antiunitary_from_json(parse_json(bytes, path));
}

SymmetryClass parse_class(const std::string& s) {
  if (s == "fermionic") return SymmetryClass::Fermionic;
  if (s == "bosonic") return SymmetryClass::Bosonic;
  if (s == "none") return SymmetryClass::None;
  throw FormatError("unknown symmetry class: " + s);
}

int run(int argc, char** argv) {
  CLI::App app{"numerical operator algebra: commutants, degeneracy certificates, "
               "Kramers verification, spin time reversal"};
  app.require_subcommand(1);

  Cli cli;
  if (const char* env = std::getenv("KRAMERS_LAB_TOL")) {
    const double t = std::strtod(env, nullptr);
    if (t > 0.0) {
      cli.tol.cluster_tol = std::min(t, 1.0);
      cli.tol.rank_rel_tol = std::min(t, 1.0);
      cli.tol.residual_tol = t;
    }
  }
  app.add_option("--tol-cluster", cli.tol.cluster_tol, "eigenvalue clustering tolerance");
  app.add_option("--tol-rank", cli.tol.rank_rel_tol, "relative rank cut for nullspaces");
  app.add_option("--tol-residual", cli.tol.residual_tol, "residual tolerance for predicates");
  app.add_option("-o,--out", cli.out, "output path ('-' for stdout)");

  // commutant
  auto* sc_comm = app.add_subcommand("commutant", "commutant basis of generator matrices");
  std::vector<std::string> gen_paths;
  bool with_elements = false;
  bool bicomm = false;
  sc_comm->add_option("--generators", gen_paths, "generator matrix JSON files")->required();
  sc_comm->add_flag("--elements", with_elements, "include basis element matrices");
  sc_comm->add_flag("--double", bicomm, "compute the double commutant instead");

  // certificate
  auto* sc_cert = app.add_subcommand("certificate", "degeneracy certificate of a Hermitian matrix");
  std::string cert_matrix;
  sc_cert->add_option("--matrix", cert_matrix, "Hermitian matrix JSON file")->required();

  // kramers
  auto* sc_kram = app.add_subcommand("kramers", "pointwise + algebraic Kramers verification");
  std::string kram_matrix, kram_op;
  sc_kram->add_option("--matrix", kram_matrix, "Hermitian matrix JSON file")->required();
  sc_kram->add_option("--op", kram_op, "antiunitary JSON file (default: canonical fermionic T)");

  // ensemble
  auto* sc_ens = app.add_subcommand("ensemble", "seeded random ensemble run (NDJSON)");
  int ens_dim = 0, ens_trials = 0;
  std::uint64_t ens_seed = 0;
  std::string ens_class, ens_op;
  sc_ens->add_option("--dim", ens_dim, "matrix dimension")->required();
  sc_ens->add_option("--class", ens_class, "fermionic | bosonic | none")->required();
  sc_ens->add_option("--trials", ens_trials, "number of trials")->required();
  sc_ens->add_option("--seed", ens_seed, "RNG seed (mandatory, no wall-clock default)")->required();
  sc_ens->add_option("--op", ens_op, "custom antiunitary JSON file");

  // spin-tr
  auto* sc_spin = app.add_subcommand("spin-tr", "time-reversal intertwiner for the spin representation");
  int particles = 1, cap = 4;
  sc_spin->add_option("--particles", particles, "number of spin-1/2 particles")->required();
  sc_spin->add_option("--cap", cap, "particle cap for the superoperator solve");

  // decompose
  auto* sc_dec = app.add_subcommand("decompose", "T = U K_H decomposition against a Hamiltonian's eigenbasis");
  std::string dec_matrix, dec_op;
  sc_dec->add_option("--matrix", dec_matrix, "Hermitian matrix JSON file")->required();
  sc_dec->add_option("--op", dec_op, "antiunitary JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  cli.tol.validate();

  if (*sc_comm) {
    RunManifest m = cli.manifest(bicomm ? "commutant --double" : "commutant");
    std::vector<Mat> gens;
    for (const auto& p : gen_paths) gens.push_back(load_matrix(p, m));
    const AlgebraBasis basis =
        bicomm ? bicommutant_basis(gens, cli.tol) : commutant_basis(gens, cli.tol);
    json rep = algebra_basis_to_json(basis, with_elements);
    rep["manifest"] = manifest_to_json(m);
    emit(cli, rep);
  } else if (*sc_cert) {
    RunManifest m = cli.manifest("certificate");
    const Mat h = load_matrix(cert_matrix, m);
    json rep = certificate_to_json(degeneracy_certificate(h, cli.tol));
    rep["manifest"] = manifest_to_json(m);
    emit(cli, rep);
  } else if (*sc_kram) {
    RunManifest m = cli.manifest("kramers");
    const Mat h = load_matrix(kram_matrix, m);
    const AntiunitaryOp t = kram_op.empty()
                                ? canonical_fermionic_t(static_cast<int>(h.rows()))
                                : load_antiunitary(kram_op, m);
    json rep = kramers_report_to_json(kramers_verify_pointwise(h, t, cli.tol));
    rep["manifest"] = manifest_to_json(m);
    emit(cli, rep);
  } else if (*sc_ens) {
    RunManifest m = cli.manifest("ensemble");
    m.seed = ens_seed;
    std::optional<AntiunitaryOp> t;
    if (!ens_op.empty()) t = load_antiunitary(ens_op, m);
    const EnsembleSpec spec = make_ensemble_spec(ens_dim, parse_class(ens_class), ens_seed,
                                                 ens_trials, t, cli.tol);

    std::vector<std::string> lines(static_cast<size_t>(spec.trials));
    EnsembleSummary sum;
    sum.trials = spec.trials;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < spec.trials; ++i) {
      const Mat h = sample_tri_hamiltonian(spec, i);
      json line{{"trial", i}};
      if (spec.symmetry == SymmetryClass::Fermionic)
        line["report"] = kramers_report_to_json(kramers_verify_pointwise(h, spec.t, cli.tol));
      else
        line["certificate"] = certificate_to_json(degeneracy_certificate(h, cli.tol));
      lines[static_cast<size_t>(i)] = line.dump();
    }
    for (const auto& line : lines) {
      const json parsed = json::parse(line);
      const bool degen = parsed.contains("report")
                             ? parsed["report"]["certificate"]["degenerate"].get<bool>()
                             : parsed["certificate"]["degenerate"].get<bool>();
      (degen ? sum.degenerate_count : sum.nondegenerate_count)++;
    }
    sum.degenerate_fraction = double(sum.degenerate_count) / double(sum.trials);
    sum.nondegenerate_fraction = double(sum.nondegenerate_count) / double(sum.trials);

    std::ostringstream outbuf;
    for (const auto& line : lines) outbuf << line << "\n";
    outbuf << json{{"summary", ensemble_summary_to_json(sum)},
                   {"manifest", manifest_to_json(m)}}
                  .dump()
           << "\n";
    write_output(cli.out, outbuf.str());
  } else if (*sc_spin) {
    RunManifest m = cli.manifest("spin-tr");
    const SpinRep rep = spin_rep(particles);
    json out = intertwiner_to_json(solve_time_reversal(rep, cli.tol, cap));
    out["n_particles"] = particles;
    out["manifest"] = manifest_to_json(m);
    emit(cli, out);
  } else if (*sc_dec) {
    RunManifest m = cli.manifest("decompose");
    const Mat h = load_matrix(dec_matrix, m);
    const AntiunitaryOp t = load_antiunitary(dec_op, m);
    const AntiunitaryOp kh = conjugation_in_basis(hermitian_eig(h, cli.tol));
    json rep{{"u", matrix_to_json(decompose(t, kh, cli.tol))},
             {"k_ref", antiunitary_to_json(kh)},
             {"manifest", manifest_to_json(m)}};
    emit(cli, rep);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const klab::HypothesisError& e) {
    std::cerr << klab::json{{"error", e.kind()}, {"premise", e.premise()}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 1;
  } catch (const klab::FormatError& e) {
    std::cerr << klab::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const klab::DimensionError& e) {
    std::cerr << klab::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const klab::EmptyGeneratorError& e) {
    std::cerr << klab::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const klab::Error& e) {
    std::cerr << klab::json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << klab::json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
