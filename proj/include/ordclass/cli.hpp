#pragma once

// Command-line front end. Every invocation writes exactly one document to
// `out`: JSON by default ({schema_version, command, inputs, result} on
// success, {schema_version, command, inputs, error} on failure), or aligned
// text with --format table.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
// parse error, 3 brute-force cap refusal.

#include <iosfwd>
#include <string>
#include <vector>

namespace ordclass::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
    kOk = 0,
    kPropertyFails = 1,
    kUsageError = 2,
    kCapRefused = 3,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same as above; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordclass::cli
