#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ldpc::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParameterExit = 2;
inline constexpr int kCapacityExit = 3;

/// Runs one subcommand. Results go to `out` (or --output), errors to `err`
/// as a single JSON object {"code": <exit code>, "message": "..."}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Numeric table with named columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Curves of figure 1 (delta for four (q, d) pairs) and figures 2-5 (omega
/// for c = 1, 2, 3 at one (q, d) each) on x = i/1000, i = 0..1000.
Table figure_data(int id);

}  // namespace ldpc::cli
