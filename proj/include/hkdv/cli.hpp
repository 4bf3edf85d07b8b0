#ifndef HKDV_CLI_HPP
#define HKDV_CLI_HPP

#include <ostream>

namespace hkdv {

// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hkdv

#endif
