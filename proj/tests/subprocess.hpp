#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testutil {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

inline RunResult run_command(const std::string& command) {
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return RunResult{code, std::move(output)};
}

inline std::string cli_path() {
    const char* path = std::getenv("FQHE_CLI");
    if (!path) throw std::runtime_error("FQHE_CLI environment variable not set");
    return path;
}

}  // namespace testutil
