#ifndef RMC_SUITE_HPP
#define RMC_SUITE_HPP

#include <string>
#include <vector>

#include "rmc/serial.hpp"

namespace rmc::suite {

std::vector<std::string> suite_names();

/// Runs the named suite; the result carries per-case records and an aggregate
/// "pass" flag.  Unknown names throw invalid_error.
serial::json run_suite(const std::string& name, const Guard& g = {});

}  // namespace rmc::suite

#endif
