#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testsupport {

struct ProcResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

inline ProcResult run_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    ProcResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Writes content to a unique file under the system temp directory.
inline std::string write_temp_file(const std::string& hint, const std::string& content) {
    static int counter = 0;
    const auto path = std::filesystem::temp_directory_path() /
                      ("matpow_test_" + std::to_string(getpid()) + "_" + hint + "_" +
                       std::to_string(counter++));
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

}  // namespace testsupport
