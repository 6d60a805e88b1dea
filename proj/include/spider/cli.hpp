// cli.hpp - the `spider` command-line front end.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 I/O error,
// 4 resource guard (oracle requested above the node cap).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spider/verify.hpp"

namespace spider::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIoError = 3, kResource = 4 };

/// Environment variable overriding the default oracle node cap of `report`.
inline constexpr const char* kNodeCapEnv = "SPIDER_NODE_CAP";
inline constexpr Count kDefaultReportNodeCap = 20000;

/// Runs the CLI on `args` (without the program name), writing to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The `verify` command with an injectable closed-form provider.
int verify(const GridBounds& bounds, unsigned threads, const ReportProvider& provider,
           std::ostream& out, std::ostream& err);

}  // namespace spider::cli
