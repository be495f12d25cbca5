#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "klab/antilinear.hpp"
#include "klab/commutant.hpp"
#include "klab/kramers.hpp"
#include "klab/spin.hpp"

namespace klab {

using json = nlohmann::json;

// Matrix wire format: {"dim": n, "entries": [[[re, im], ...], ...]},
// row-major nesting, complex numbers as [re, im] pairs.
json matrix_to_json(const Mat& a);
Mat matrix_from_json(const json& j);

// {"m": <matrix>, "convention": "m_conj"} — convention string mandatory.
json antiunitary_to_json(const AntiunitaryOp& t);
AntiunitaryOp antiunitary_from_json(const json& j);

json tolerances_to_json(const ToleranceConfig& cfg);
ToleranceConfig tolerances_from_json(const json& j);

json spectrum_to_json(const SpectrumReport& rep);
json certificate_to_json(const DegeneracyCertificate& cert);
json algebra_basis_to_json(const AlgebraBasis& basis, bool include_elements);
json kramers_report_to_json(const KramersReport& rep);
json intertwiner_to_json(const IntertwinerSolution& sol);
json ensemble_summary_to_json(const EnsembleSummary& sum);

// FNV-1a 64-bit over raw bytes, rendered "fnv1a64:<hex>"; the content
// digest recorded in run manifests.
std::string content_digest(const std::string& bytes);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> input_digests;  // path -> digest
  std::optional<std::uint64_t> seed;
  ToleranceConfig tolerances;
  std::string version;
};

json manifest_to_json(const RunManifest& m);

}  // namespace klab
