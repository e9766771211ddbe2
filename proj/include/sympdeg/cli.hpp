#pragma once

#include <iosfwd>

namespace sympdeg::cli {

/// Runs one verb. Returns 0 on success, 2 on a parse error and 1 on a domain
/// error (the error's name is printed to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympdeg::cli
