#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

enum Exit { Ok = 0, ParseFailure = 2, DomainFailure = 3, OracleMismatch = 4 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
