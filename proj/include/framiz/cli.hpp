#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framiz {

inline constexpr const char* kReportSchema = "framiz.report/1";

// Exit codes: 0 success, 1 mathematical mismatch, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace framiz
