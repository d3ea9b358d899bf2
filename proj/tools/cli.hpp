#pragma once

#include <iosfwd>

namespace nmnc::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCountMismatch = 1;  // Error 1
inline constexpr int kEmptyInput = 2;     // Error 2
inline constexpr int kInvalid = 3;        // syntax, range or decode errors
inline constexpr int kNotFound = 4;       // unknown library song
inline constexpr int kUsage = 64;         // bad flags
inline constexpr int kNoInput = 66;       // input file missing or unreadable
inline constexpr int kCantCreate = 73;    // output file cannot be written

/// Runs one command line. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nmnc::cli
