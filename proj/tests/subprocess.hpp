// Minimal subprocess capture for CLI-level tests.
#ifndef FREYBOUND_TESTS_SUBPROCESS_HPP
#define FREYBOUND_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace freybound::testing {

struct RunResult {
    int status = -1;
    std::string out;
};

inline std::string cli_binary() {
    const char* bin = std::getenv("FREYBOUND_BIN");
    if (!bin) throw std::runtime_error("FREYBOUND_BIN not set (ctest sets it)");
    return bin;
}

// stderr is left alone so failures stay visible in the test log
inline RunResult run_cli(const std::string& args) {
    std::string cmd = cli_binary() + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

}  // namespace freybound::testing

#endif
