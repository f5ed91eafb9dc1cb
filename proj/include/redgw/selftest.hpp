#pragma once

// Invariant suites over every module, run by `redgw selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace redgw {

struct SuiteResult
{
	std::string name;
	bool passed = true;
	std::size_t checks = 0;
	/// First failure, if any.
	std::string detail;
};

std::vector<SuiteResult> run_selftest(std::uint64_t seed);

} // namespace redgw
