#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fatpoints/cli/report.hpp"

namespace fatpoints::cli {

struct CollideFlags {
  bool classify = false;
  bool measure = false;
  bool compare = false;  // implies measure
};

// Each command fills a Report; errors are mapped to status and exit code
// by run_command, so these may throw.
Report cmd_dim(const std::string& spec, const RunConfig& cfg);
Report cmd_collide(int n, const std::string& mults, CollideFlags flags, const RunConfig& cfg);
Report cmd_conjecture(int n, int k, const RunConfig& cfg);
Report cmd_cremona(const std::string& spec, const RunConfig& cfg);
Report cmd_lift(int n, int t, const RunConfig& cfg);
Report cmd_verify(const std::vector<std::string>& ids, const RunConfig& cfg);

/// 0 ok, 1 check failure, 2 usage or parse error, 3 trials disagree.
int exit_code_for(const std::exception& e) noexcept;

/// Full command line front end; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fatpoints::cli
