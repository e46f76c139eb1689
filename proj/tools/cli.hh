#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdstab::cli
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_violation = 1,
        exit_usage = 2,
        exit_resource = 3
    };

    // Runs one command line (args excludes the program name).
    [[nodiscard]] auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
