#include "qrealize/io.hpp"

#include "qrealize/error.hpp"

#include <cmath>

namespace qrealize::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  } catch (const json::out_of_range& e) {  // e.g. 1e999
    throw ParseError(std::string("number out of range: ") + e.what());
  }
}

std::optional<double> optional_positive(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ParseError(std::string("tolerances.") + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x) || x <= 0.0) {
    throw ParseError(std::string("tolerances.") + key + " must be finite and positive");
  }
  return x;
}

}  // namespace

RealMatrix matrix_from_json(const json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError(name + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return RealMatrix(0, 0);

  if (!j.front().is_array()) throw ParseError(name + "[0]: expected an array of numbers");
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  RealMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    const std::string where = name + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError(where + ": expected an array of numbers");
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError(where + ": row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& v = row[static_cast<std::size_t>(k)];
      const std::string cell = where + "[" + std::to_string(k) + "]";
      if (!v.is_number()) throw ParseError(cell + ": entry is not a number");
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw ParseError(cell + ": entry is not finite");
      m(i, k) = x;
    }
  }
  return m;
}

ordered_json matrix_to_json(const RealMatrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(ordered_json::array({m(i, k).real(), m(i, k).imag()}));
    }
    out.push_back(std::move(row));
  }
  return out;
}

SystemDocument parse_system_document(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("system document must be a JSON object");
  for (const char* key : {"A", "B", "C"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing matrix \"") + key + "\"");
  }

  SystemDocument doc;
  doc.system.A = matrix_from_json(j.at("A"), "A");
  doc.system.B = matrix_from_json(j.at("B"), "B");
  doc.system.C = matrix_from_json(j.at("C"), "C");

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) throw ParseError("tolerances must be an object");
    doc.rank_rel_tol = optional_positive(t, "rank_rel_tol");
    doc.residual_tol = optional_positive(t, "residual_tol");
    doc.symmetry_tol = optional_positive(t, "symmetry_tol");
  }
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
    doc.seed = s.get<std::uint64_t>();
  }

  doc.system = validate_system(std::move(doc.system));
  return doc;
}

LtiSystem parse_system(const std::string& text) { return parse_system_document(text).system; }

std::string serialize_system(const SystemDocument& doc) {
  ordered_json j;
  j["A"] = matrix_to_json(doc.system.A);
  j["B"] = matrix_to_json(doc.system.B);
  j["C"] = matrix_to_json(doc.system.C);
  ordered_json tol = ordered_json::object();
  if (doc.rank_rel_tol) tol["rank_rel_tol"] = *doc.rank_rel_tol;
  if (doc.residual_tol) tol["residual_tol"] = *doc.residual_tol;
  if (doc.symmetry_tol) tol["symmetry_tol"] = *doc.symmetry_tol;
  if (!tol.empty()) j["tolerances"] = std::move(tol);
  if (doc.seed) j["seed"] = *doc.seed;
  return j.dump(2) + "\n";
}

RealizationDocument parse_realization(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("realization document must be a JSON object");
  const json& src = j.contains("realization") ? j.at("realization") : j;
  if (!src.is_object() || !src.contains("B1") || !src.contains("D1")) {
    throw ParseError("realization document must provide \"B1\" and \"D1\"");
  }
  RealizationDocument doc;
  doc.B1 = matrix_from_json(src.at("B1"), "B1");
  doc.D1 = matrix_from_json(src.at("D1"), "D1");
  return doc;
}

namespace {

ordered_json tolerances_to_json(const TolerancePolicy& tol) {
  ordered_json t;
  t["rank_rel_tol"] = tol.rank_rel_tol;
  t["residual_tol"] = tol.residual_tol;
  t["symmetry_tol"] = tol.symmetry_tol;
  return t;
}

ordered_json residuals_to_json(const ResidualReport& report) {
  ordered_json out = ordered_json::array();
  for (const Residual& r : report.entries) {
    ordered_json e;
    e["name"] = r.name;
    e["value"] = r.value;
    e["absolute"] = r.absolute;
    e["scale"] = r.scale;
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

ordered_json report_to_json(const ReportContents& c) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["tolerances"] = tolerances_to_json(c.inputs.tol);
  j["seed"] = c.inputs.seed;
  j["certificate_trials"] = c.inputs.certificate_trials;

  const LtiSystem& sys = c.inputs.system;
  ordered_json input;
  input["A"] = matrix_to_json(sys.A);
  input["B"] = matrix_to_json(sys.B);
  input["C"] = matrix_to_json(sys.C);
  j["input"] = std::move(input);
  j["dimensions"] = {{"n", sys.n()}, {"n_u", sys.n_u()}, {"n_y", sys.n_y()}};

  if (c.skew) {
    j["S_tilde"] = matrix_to_json(c.skew->S_tilde);
    ordered_json eig = ordered_json::array();
    for (Eigen::Index k = 0; k < c.skew->eigenvalues().size(); ++k) {
      eig.push_back(c.skew->eigenvalues()(k));
    }
    j["S_eigenvalues"] = std::move(eig);
    j["r"] = c.skew->rank_r;
    j["n_v"] = sys.n_u() + c.skew->rank_r;
  }
  if (c.theorem2_count) j["theorem2_noise_count"] = *c.theorem2_count;

  if (c.realization) {
    const Realization& re = *c.realization;
    ordered_json r;
    r["n_v"] = re.n_v;
    r["R"] = matrix_to_json(re.R);
    r["Lambda"] = matrix_to_json(re.Lambda());
    r["Lambda_rows"] = {{"b0", re.Lambda_b0.rows()},
                        {"b1", re.Lambda_b1.rows()},
                        {"b2", re.Lambda_b2.rows()}};
    r["B1"] = matrix_to_json(re.B1);
    r["D1"] = matrix_to_json(re.D1);
    r["Xi1"] = matrix_to_json(re.Xi1);
    r["Xi2"] = matrix_to_json(re.Xi2);
    j["realization"] = std::move(r);
  }
  if (c.residuals) j["residuals"] = residuals_to_json(*c.residuals);
  if (c.certificate) {
    const MinimalityCertificate& m = *c.certificate;
    j["certificate"] = {{"r", m.r},
                        {"trials", m.trials},
                        {"min_observed_rank", m.min_observed_rank},
                        {"constructive_rank", m.constructive_rank},
                        {"zero_candidate_rank", m.zero_candidate_rank},
                        {"routes_agree", m.routes_agree},
                        {"lower_bound_held", m.lower_bound_held}};
  }
  if (!c.error.empty()) j["error"] = c.error;
  j["all_pass"] = c.all_pass;
  return j;
}

}  // namespace qrealize::io
