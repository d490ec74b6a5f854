#ifndef SPCLI_SELFTEST_HPP
#define SPCLI_SELFTEST_HPP

#include <json.hpp>

namespace spcli {

// Battery behind the `check` subcommand: one entry per internal invariant
// exercised, with a deterministic seed for the randomized parts.
nlohmann::ordered_json run_selftest(unsigned seed);

} // namespace spcli

#endif
