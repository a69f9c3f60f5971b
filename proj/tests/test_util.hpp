#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testutil {

// Two-decimal rounding, ties to even (the mode tables are compared in).
inline double round2(double value) { return std::nearbyint(value * 100.0) / 100.0; }

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout only
};

// Runs a shell command, capturing stdout and the exit code. stderr is left
// attached to the test's own stderr.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value != nullptr ? std::string(value) : fallback;
}

} // namespace testutil
