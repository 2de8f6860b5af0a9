#ifndef TSPLIT_TOOLS_CLI_HPP
#define TSPLIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tsplit::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUserError = 2, kCertificationFailure = 3 };

// Everything `compute` reports. Text and JSON carry the same fields.
struct ComputeReport {
  int d = 0, e = 0, n = 0;
  std::string field;
  std::vector<std::string> F;  // hypersurface body lines
  std::vector<std::string> psi;
  std::vector<std::string> delta;
  std::vector<int> T_splitting;
  std::vector<int> N_splitting;
  bool T_balanced = false;
  bool N_balanced = false;
  long long interpolation = 0;
  long long expected = 0;
  std::string verdict;
  std::vector<int> predicted;  // empty unless the verdict is ExactSplitting
  std::string tag;
  std::map<std::string, bool> certificates;

  std::string to_text() const;
  std::string to_json() const;
  static ComputeReport from_text(const std::string& text);
  static ComputeReport from_json(const std::string& text);

  friend bool operator==(const ComputeReport&, const ComputeReport&) = default;
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsplit::cli

#endif
