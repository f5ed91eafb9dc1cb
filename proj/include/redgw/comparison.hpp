#pragma once

// The genus-one comparison coefficient: the Euler class of the twisted normal
// data on P_R = P(A_R + O) over R = M_{1,1} x P^1, pushed forward through the
// Segre classes of A_R and integrated, next to its closed form
// (2 - c_1(T_Q) . d[line]) / 24.

#include "redgw/bundle.hpp"
#include "redgw/complete_intersection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redgw {

struct ComparisonInput
{
	CompleteIntersection target;
	int d = 1;
	int k = 0;
	/// GW_{0,d}(alpha), when known.
	std::optional<Rational> gw0;

	void validate() const;
};

/// Chow data on R and P_R. Generator names: alpha (= 24 c_1(Hodge)), beta
/// (hyperplane of P^1) and the divisor at infinity D.
struct ComparisonModel
{
	Ring base;
	BundleExpr hodge;
	/// Normal bundle of the embedded degree-d line, rank n - 1.
	BundleExpr normal;
	std::vector<BundleExpr> line_summands;
	BundleExpr a_r;
	ProjectiveCompletion projective;
};

ComparisonModel build_pr_ring(const ComparisonInput &input);

struct CoefficientTrace
{
	/// c(H^vee (x) N) pulled back to P_R.
	GradedClass twisted_chern;
	/// e((H^vee (x) N)(-D)).
	GradedClass euler;
	GradedClass segre_a;
	/// Pushforward of the Euler class to R.
	GradedClass pushforward;
	/// Degree on R, before discharging the sign (-1)^(n+1).
	Rational raw;
};

CoefficientTrace coefficient_trace(const ComparisonInput &input);

/// The pipeline coefficient with the (-1)^(n+1) sign discharged; 0 when no
/// stratum survives the dimension audit (dim Q = 2).
Rational coefficient_symbolic(const ComparisonInput &input);

/// (2 - (n + 1 - sum deg f_i) d) / 24 for threefolds, 0 for surfaces.
Rational coefficient_closed(const ComparisonInput &input);

/// (-1)^(d sum deg f_i + m - m g).
int sign_factor(const ComparisonInput &input, int genus);

struct ComparisonReport
{
	ComparisonInput input;
	Rational coefficient_symbolic;
	Rational coefficient_closed;
	Rational raw_pipeline_value;
	int sign_factor = 1;
	std::optional<Rational> correction;
	bool match = false;
	std::string twisted_chern;
	std::string euler;
	std::string pushforward;
	std::string segre_a;
	std::string statement;
};

ComparisonReport compare(const ComparisonInput &input);

} // namespace redgw
