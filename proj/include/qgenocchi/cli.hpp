#ifndef QGENOCCHI_CLI_HPP
#define QGENOCCHI_CLI_HPP

#include <string>
#include <vector>

namespace qgenocchi::cli
{

enum ExitCode { ok = 0, unexpected_result = 1, parameter_error = 2 };

struct RunResult {
    int exit_code = ok;
    std::string out; // rendered report (stdout or the --output file)
    std::string err; // diagnostics for stderr
};

// Parses and executes one command line (without the program name). Nothing is
// printed; with --output the report goes to that file and `out` stays empty.
RunResult run(const std::vector<std::string> &args);

// argv wrapper used by the executable: prints out/err and returns the code.
int main_entry(int argc, char **argv);

} // namespace qgenocchi::cli

#endif
