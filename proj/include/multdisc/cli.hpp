#pragma once

// Command-line front end. run() is the whole program minus process
// plumbing, so tests can drive it with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace multdisc::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,    ///< bad flags, unparseable or out-of-domain input
    anomaly = 2,  ///< AmbiguousClassification, ChainDegenerate, failed verification
    internal = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "123…(40 digits)…789" when the decimal string has more than max_digits digits; 0 disables.
std::string truncate_digits(const std::string& decimal, std::size_t max_digits);

}  // namespace multdisc::cli
