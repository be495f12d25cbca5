#include "klab/json_io.hpp"

namespace klab {

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("complex entry must be a [re, im] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const Mat& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(cplx_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", a.rows()}, {"entries", std::move(rows)}};
}

Mat matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw FormatError("matrix JSON must have \"dim\" and \"entries\"");
  const auto n = j.at("dim").get<Eigen::Index>();
  if (n <= 0) throw FormatError("matrix dim must be positive");
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n)
    throw FormatError("matrix entries must be dim rows");
  Mat a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = entries[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw FormatError("matrix row has wrong length");
    for (Eigen::Index k = 0; k < n; ++k) a(i, k) = cplx_from_json(row[static_cast<size_t>(k)]);
  }
  require_finite(a, "matrix JSON");
  return a;
}

json antiunitary_to_json(const AntiunitaryOp& t) {
  return json{{"m", matrix_to_json(t.m)}, {"convention", "m_conj"}};
}

AntiunitaryOp antiunitary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("convention"))
    throw FormatError("antiunitary JSON must have \"m\" and \"convention\"");
  if (j.at("convention").get<std::string>() != "m_conj")
    throw FormatError("antiunitary convention must be \"m_conj\"");
  return {matrix_from_json(j.at("m"))};
}

json tolerances_to_json(const ToleranceConfig& cfg) {
  return json{{"cluster_tol", cfg.cluster_tol},
              {"rank_rel_tol", cfg.rank_rel_tol},
              {"residual_tol", cfg.residual_tol}};
}

ToleranceConfig tolerances_from_json(const json& j) {
  ToleranceConfig cfg;
  cfg.cluster_tol = j.at("cluster_tol").get<double>();
  cfg.rank_rel_tol = j.at("rank_rel_tol").get<double>();
  cfg.residual_tol = j.at("residual_tol").get<double>();
  cfg.validate();
  return cfg;
}

json spectrum_to_json(const SpectrumReport& rep) {
  json clusters = json::array();
  for (const auto& c : rep.clusters)
    clusters.push_back(json{{"value", c.value}, {"multiplicity", c.multiplicity}});
  return json{{"clusters", std::move(clusters)}, {"cluster_tol", rep.cluster_tol}};
}

json certificate_to_json(const DegeneracyCertificate& cert) {
  return json{{"commutant_dim", cert.commutant_dim},
              {"bicommutant_dim", cert.bicommutant_dim},
              {"degenerate", cert.degenerate},
              {"rank_gap_warning", cert.rank_gap_warning},
              {"generator_norm", cert.generator_norm},
              {"tolerances", tolerances_to_json(cert.tolerances)}};
}

json algebra_basis_to_json(const AlgebraBasis& basis, bool include_elements) {
  json j{{"dim_space", basis.dim_space},
         {"dimension", basis.dimension()},
         {"rank_gap_warning", basis.rank_gap_warning}};
  if (include_elements) {
    json elems = json::array();
    for (const Mat& e : basis.elements) elems.push_back(matrix_to_json(e));
    j["elements"] = std::move(elems);
  }
  return j;
}

json kramers_report_to_json(const KramersReport& rep) {
  json pairings = json::array();
  for (const auto& p : rep.pairings) {
    json coeffs = json::array();
    for (Eigen::Index i = 0; i < p.t_psi_coeffs.size(); ++i)
      coeffs.push_back(cplx_to_json(p.t_psi_coeffs(i)));
    pairings.push_back(json{{"index", p.index},
                            {"t_psi_coeffs", std::move(coeffs)},
                            {"overlap", p.overlap},
                            {"residual", p.residual}});
  }
  return json{{"spectrum", spectrum_to_json(rep.spectrum)},
              {"pairings", std::move(pairings)},
              {"all_even", rep.all_even},
              {"max_overlap", rep.max_overlap},
              {"max_residual", rep.max_residual},
              {"hypotheses", json{{"fermion_condition", true}, {"t_invariance", true}}},
              {"certificate", certificate_to_json(rep.certificate)}};
}

json intertwiner_to_json(const IntertwinerSolution& sol) {
  json basis = json::array();
  for (const Mat& m : sol.basis) basis.push_back(matrix_to_json(m));
  return json{{"basis", std::move(basis)},
              {"solution_dim", sol.solution_dim},
              {"involution_square", to_string(sol.involution_square)}};
}

json ensemble_summary_to_json(const EnsembleSummary& sum) {
  return json{{"trials", sum.trials},
              {"degenerate_count", sum.degenerate_count},
              {"nondegenerate_count", sum.nondegenerate_count},
              {"degenerate_fraction", sum.degenerate_fraction},
              {"nondegenerate_fraction", sum.nondegenerate_fraction}};
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json manifest_to_json(const RunManifest& m) {
  json inputs = json::object();
  for (const auto& [path, digest] : m.input_digests) inputs[path] = digest;
  json j{{"command", m.command},
         {"inputs", std::move(inputs)},
         {"tolerances", tolerances_to_json(m.tolerances)},
         {"version", m.version}};
  if (m.seed) j["seed"] = *m.seed;
  return j;
}

}  // namespace klab
