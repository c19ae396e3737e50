#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace irsim::cli {

/// Exit codes: 0 success, 1 configuration or runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1..4", "42", "1,5,9" or mixtures such as "1..3,10". Throws std::invalid_argument.
std::vector<std::uint64_t> parse_seed_list(std::string_view spec);

}  // namespace irsim::cli
