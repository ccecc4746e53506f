#pragma once

#include <iosfwd>

namespace nlper::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitViolation = 2;

// Entry point behind the nlper executable. Results go to `out`, diagnostics
// and usage text to `err`. Returns 0 on success, 1 on usage or domain errors
// and 2 when a verification finds a violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nlper::cli
