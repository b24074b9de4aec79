#pragma once

#include "qrealize/realizability.hpp"
#include "qrealize/synthesis.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace qrealize::io {

inline constexpr const char* kToolName = "qrealize";
inline constexpr const char* kToolVersion = "1.0.0";

/// Input file: {"A": [[..]], "B": [[..]], "C": [[..]],
///              "tolerances": {"rank_rel_tol": .., "residual_tol": .., "symmetry_tol": ..},
///              "seed": ..}. Matrices are row-major; tolerances and seed are optional.
struct SystemDocument {
  LtiSystem system;
  std::optional<double> rank_rel_tol;
  std::optional<double> residual_tol;
  std::optional<double> symmetry_tol;
  std::optional<std::uint64_t> seed;
};

/// Throws ParseError (malformed JSON, missing key, ragged row, non-finite
/// entry; messages carry the matrix name and row/column) or ValidationError.
SystemDocument parse_system_document(const std::string& text);
LtiSystem parse_system(const std::string& text);

std::string serialize_system(const SystemDocument& doc);

nlohmann::ordered_json matrix_to_json(const RealMatrix& m);
/// Complex entries as [re, im] pairs.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
RealMatrix matrix_from_json(const nlohmann::json& j, const std::string& name);

/// B1 and D1, either at the top level or under "realization" (so a report
/// written by `synthesize` can be fed straight back to `check`).
struct RealizationDocument {
  RealMatrix B1;
  RealMatrix D1;
};

RealizationDocument parse_realization(const std::string& text);

struct ReportInputs {
  LtiSystem system;
  TolerancePolicy tol;
  std::uint64_t seed = 0;
  int certificate_trials = 0;
};

/// Everything `synthesize` knows. Pieces that were not reached (because an
/// earlier stage threw) stay empty and are omitted from the document.
struct ReportContents {
  ReportInputs inputs;
  std::optional<SkewReport> skew;
  std::optional<int> theorem2_count;
  std::optional<Realization> realization;
  std::optional<ResidualReport> residuals;
  std::optional<MinimalityCertificate> certificate;
  std::string error;
  bool all_pass = false;
};

nlohmann::ordered_json report_to_json(const ReportContents& contents);

}  // namespace qrealize::io
