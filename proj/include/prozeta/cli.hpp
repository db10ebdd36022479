// Command line front end. Exit codes: 0 success / verification passed,
// 1 verification failed, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prozeta {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prozeta
