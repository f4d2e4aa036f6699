#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs a shell command, captures stdout, returns the exit code. stderr is
// routed to /dev/null unless the caller redirects it in the command.
inline RunResult run(const std::string& command) {
    RunResult r;
    std::string full = command + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        r.exit_code = -1;
        return r;
    }
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        r.output.append(buffer.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/alliancekit_test_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace testsupport
