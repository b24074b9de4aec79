#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qrealize::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  ///< validation, parse, or numerical check failed
inline constexpr int kExitIo = 2;      ///< a file could not be read or written

/// Command-line overrides. Unset values fall back to the input document, then
/// to the library defaults.
struct Options {
  std::optional<double> rank_tol;
  std::optional<double> residual_tol;
  std::optional<std::uint64_t> seed;
  int trials = 200;
};

int cmd_count(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_synthesize(const std::string& path, const std::string& out_path, const Options& opts,
                   std::ostream& out, std::ostream& err);
int cmd_check(const std::string& system_path, const std::string& realization_path,
              const Options& opts, std::ostream& out, std::ostream& err);
int cmd_paper_example(const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace qrealize::cli
