#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace isocrystal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitUsage = 64;

// args[0] is the program name. Writes one JSON document (or DOT text) to
// `out` on success and a {"code","message"} object on domain errors;
// diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isocrystal::cli
