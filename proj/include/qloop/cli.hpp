#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qloop/shuffle.hpp"

namespace qloop::cli {

inline constexpr const char* kReportSchema = "qloop.report/1";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

/// Parses "2:0,1:-1" (1-based colors). Throws ConfigError.
Word parse_word(const std::string& text, int rank);
std::string word_str(const Word& word);

/// Parses "1,0,2". Throws ConfigError.
std::vector<int> parse_int_list(const std::string& text);

/// Runs one subcommand; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qloop::cli
