#include "qrealize/cli.hpp"

#include "qrealize/error.hpp"
#include "qrealize/fixtures.hpp"
#include "qrealize/io.hpp"
#include "qrealize/synthesis.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qrealize::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("error reading " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoFailure("error writing " + path);
}

TolerancePolicy resolve_tolerances(const Options& opts, const io::SystemDocument* doc) {
  TolerancePolicy tol;
  if (doc) {
    if (doc->rank_rel_tol) tol.rank_rel_tol = *doc->rank_rel_tol;
    if (doc->residual_tol) tol.residual_tol = *doc->residual_tol;
    if (doc->symmetry_tol) tol.symmetry_tol = *doc->symmetry_tol;
  }
  if (opts.rank_tol) tol.rank_rel_tol = *opts.rank_tol;
  if (opts.residual_tol) tol.residual_tol = *opts.residual_tol;
  tol.validate();
  return tol;
}

std::uint64_t resolve_seed(const Options& opts, const io::SystemDocument* doc) {
  if (opts.seed) return *opts.seed;
  if (doc && doc->seed) return *doc->seed;
  return 0;
}

const char* condition_label(const std::string& name) {
  if (name == residual_names::kCondition1) return "condition (i)";
  if (name == residual_names::kCondition2) return "condition (ii)";
  if (name == residual_names::kCondition3) return "condition (iii)";
  return "identity";
}

void print_residuals(const ResidualReport& report, std::ostream& out) {
  for (const Residual& r : report.entries) {
    out << std::left << std::setw(16) << condition_label(r.name) << std::setw(26) << r.name
        << std::right << " residual=" << std::scientific << std::setprecision(3) << r.value
        << " tol=" << r.tolerance << (r.pass ? "  PASS" : "  FAIL") << '\n';
  }
  out << std::defaultfloat;
}

void print_certificate(const MinimalityCertificate& cert, std::ostream& out) {
  out << "certificate: trials=" << cert.trials << " min_observed_rank=" << cert.min_observed_rank
      << " constructive_rank=" << cert.constructive_rank << " bound=" << cert.r / 2
      << " routes_agree=" << (cert.routes_agree ? "true" : "false")
      << " lower_bound_held=" << (cert.lower_bound_held ? "true" : "false") << '\n';
}

/// Runs the caller's body, mapping failures onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoFailure& e) {
    err << "qrealize: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "qrealize: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace

int cmd_count(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::SystemDocument doc = io::parse_system_document(read_file(path));
    const TolerancePolicy tol = resolve_tolerances(opts, &doc);
    const SkewReport skew = compute_S_tilde(doc.system, tol);
    const NoiseCount count = minimal_noise_count(doc.system, skew);
    out << "r=" << count.r << " n_v=" << count.n_v
        << " theorem2_n_v=" << theorem2_noise_count(doc.system, skew) << '\n';
    return kExitOk;
  });
}

int cmd_synthesize(const std::string& path, const std::string& out_path, const Options& opts,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::SystemDocument doc = io::parse_system_document(read_file(path));

    io::ReportContents c;
    c.inputs.system = doc.system;
    c.inputs.tol = resolve_tolerances(opts, &doc);
    c.inputs.seed = resolve_seed(opts, &doc);
    c.inputs.certificate_trials = opts.trials;

    try {
      c.skew = compute_S_tilde(doc.system, c.inputs.tol);
      c.theorem2_count = theorem2_noise_count(doc.system, *c.skew);
      SynthesisResult res = assemble_realization(doc.system, c.inputs.tol);
      c.realization = std::move(res.realization);
      c.residuals = std::move(res.report);
      c.certificate =
          minimality_certificate(doc.system, opts.trials, c.inputs.seed, c.inputs.tol);
    } catch (const Error& e) {
      c.error = e.what();
    }
    c.all_pass = c.error.empty() && c.residuals && c.residuals->all_pass() && c.certificate &&
                 c.certificate->lower_bound_held && c.certificate->routes_agree;

    write_file(out_path, io::report_to_json(c).dump(2) + "\n");

    if (c.skew) {
      out << "r=" << c.skew->rank_r << " n_v=" << doc.system.n_u() + c.skew->rank_r << '\n';
    }
    if (c.residuals) print_residuals(*c.residuals, out);
    if (c.certificate) print_certificate(*c.certificate, out);
    if (!c.error.empty()) err << "qrealize: " << c.error << '\n';
    out << (c.all_pass ? "all checks passed" : "checks FAILED") << "; report written to " << out_path
        << '\n';
    return c.all_pass ? kExitOk : kExitDomain;
  });
}

int cmd_check(const std::string& system_path, const std::string& realization_path,
              const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string system_text = read_file(system_path);
    const std::string realization_text = read_file(realization_path);
    const io::SystemDocument doc = io::parse_system_document(system_text);
    const io::RealizationDocument real = io::parse_realization(realization_text);
    const TolerancePolicy tol = resolve_tolerances(opts, &doc);

    const ResidualReport report = check_physical_realizability(doc.system, real.B1, real.D1, tol);
    print_residuals(report, out);
    if (report.all_pass()) {
      out << "verdict: PASS (physically realizable with n_v=" << real.B1.cols() << ")\n";
      return kExitOk;
    }
    out << "verdict: FAIL";
    for (const Residual& r : report.entries) {
      if (!r.pass) out << ' ' << condition_label(r.name);
    }
    out << '\n';
    return kExitDomain;
  });
}

int cmd_paper_example(const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LtiSystem sys = validate_system(fixtures::paper_example());
    const TolerancePolicy tol = resolve_tolerances(opts, nullptr);
    const std::uint64_t seed = resolve_seed(opts, nullptr);
    bool ok = true;

    const SkewReport skew = compute_S_tilde(sys, tol);
    out << "S_tilde =\n" << std::fixed << std::setprecision(4);
    for (Eigen::Index i = 0; i < skew.S_tilde.rows(); ++i) {
      out << "  ";
      for (Eigen::Index k = 0; k < skew.S_tilde.cols(); ++k) {
        const double v = skew.S_tilde(i, k);
        out << std::setw(9) << (std::abs(v) < 5e-5 ? 0.0 : v);
      }
      out << '\n';
    }
    out << std::defaultfloat;
    const double max_dev = (skew.S_tilde - fixtures::paper_example_S_tilde()).cwiseAbs().maxCoeff();
    const bool matches = max_dev <= 1e-4;
    ok = ok && matches;
    out << "S_tilde(1,2)=" << std::fixed << std::setprecision(4) << skew.S_tilde(0, 1)
        << std::defaultfloat << '\n';
    out << "published S_tilde match (max deviation " << std::scientific << std::setprecision(2)
        << max_dev << std::defaultfloat << " <= 1e-4): " << (matches ? "yes" : "NO") << '\n';

    const NoiseCount count = minimal_noise_count(sys, skew);
    ok = ok && count.r == 4 && count.n_v == 6;
    out << "r=" << count.r << " n_v=" << count.n_v << '\n';
    out << "theorem2_n_v=" << theorem2_noise_count(sys, skew) << '\n';

    const SynthesisResult res = assemble_realization(sys, tol);
    out << "B1 is " << res.realization.B1.rows() << "x" << res.realization.B1.cols() << '\n';
    print_residuals(res.report, out);
    ok = ok && res.report.all_pass() && res.realization.B1.cols() == 6;

    const MinimalityCertificate cert = minimality_certificate(sys, opts.trials, seed, tol);
    print_certificate(cert, out);
    ok = ok && cert.lower_bound_held && cert.routes_agree;

    out << (ok ? "paper example reproduced" : "paper example FAILED") << '\n';
    return ok ? kExitOk : kExitDomain;
  });
}

}  // namespace qrealize::cli
