#ifndef SEIFERT_CLI_HPP
#define SEIFERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNegative = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert::cli

#endif  // SEIFERT_CLI_HPP
