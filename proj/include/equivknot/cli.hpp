#pragma once

#include <iosfwd>

namespace equivknot::cli {

// Exit codes: 0 success, 1 domain failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equivknot::cli
