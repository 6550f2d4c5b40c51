#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests and the acceptance driver call it in-process.
//
// Exit codes: 0 success, 1 a report failed or a bracket was invalid,
// 2 usage or argument error, 3 numerical non-convergence.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bergman::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedReport = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

/// args excludes the program name, e.g. {"norm", "--f", "mono:1,1,0", "--p", "2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Static SVG 1.1 plot of any CSV table this CLI writes. Output depends only on
/// the CSV text, so re-rendering a saved CSV reproduces the file byte for byte.
/// ArgumentError for an unrecognised header.
std::string render_svg(std::string_view csv_text);

}  // namespace bergman::cli
