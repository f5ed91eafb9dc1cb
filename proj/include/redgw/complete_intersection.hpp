#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace redgw {

/// Raised for inputs outside the supported range (bad flags, out-of-scope
/// dimensions); the CLI maps it to exit code 2.
class InputError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// Q = {f_1 = ... = f_m = 0} in P^n, recorded by n and the degrees of the f_i.
struct CompleteIntersection
{
	int n = 0;
	std::vector<int> degrees;

	int codimension() const { return static_cast<int>(degrees.size()); }
	int dimension() const { return n - codimension(); }
	int degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }
	/// c_1(T_Q) . [line] = n + 1 - sum deg f_i, by adjunction.
	int first_chern_on_line() const { return n + 1 - degree_sum(); }

	/// Throws InputError unless n >= 1, every degree >= 1 and dim Q is 2 or 3.
	void validate() const;
};

} // namespace redgw
