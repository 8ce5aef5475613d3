#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace classnum::cli {

/* 0 = success / no violation, 1 = usage, I/O or parse error,
 * 2 = at least one Violation row. */
constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_violation = 2;

/*
 * Dispatches the subcommands (factor, phi, order, eval, hbound, check,
 * descend, verify) over the given arguments, without the program name.
 * All regular output goes to `out`, diagnostics to `err`; output is
 * byte-identical across runs on identical inputs.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace classnum::cli
