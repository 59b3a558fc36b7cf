#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p2b::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConsistency = 3;

// Version of the JSON output layout, emitted as the top-level "schema" field.
inline constexpr const char* kSchemaVersion = "1";

// Grid scans refuse more cells than this.
inline constexpr long long kMaxScanCells = 1'000'000;

// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace p2b::cli
