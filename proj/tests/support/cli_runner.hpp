#pragma once

// Runs the stargrundy binary through the shell and captures stdout, stderr
// and the exit status. SG_CLI_PATH is set by the build.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// `env` is prepended verbatim, e.g. "NODE_BUDGET=10".
inline Run run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const auto err_path = std::filesystem::temp_directory_path() /
                          ("sg_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(++counter));
    const std::string cmd = env + " '" SG_CLI_PATH "' " + args + " 2>'" + err_path.string() + "'";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err_path);
    std::filesystem::remove(err_path);
    return r;
}

}  // namespace cli
