#pragma once

// Rank and dimension bookkeeping for the rational-part contributions: which
// strata can carry a class of the expected cycle dimension, and which vanish
// for dimension reasons alone.

#include "redgw/complete_intersection.hpp"
#include "redgw/tree.hpp"

#include <span>
#include <vector>

namespace redgw {

enum class Verdict
{
	vanishes_by_dimension,
	survives,
};

const char *to_string(Verdict v);

struct StratumVerdict
{
	Stratum stratum;
	int k0 = 0;
	long long dim_x = 0;
	Verdict verdict = Verdict::vanishes_by_dimension;
};

struct AuditReport
{
	CompleteIntersection target;
	int d = 0;
	int k = 0;

	long long rank_v1 = 0;
	long long rank_v2 = 0;
	/// Dimension of every rational component, without and with p-fields.
	long long dim_component = 0;
	long long dim_component_p = 0;
	long long dim_cone = 0;
	/// Cycle dimension of the B-classes.
	long long dim_b = 0;
	/// Dimension of the total space of F, where the second B-class lives.
	long long dim_f_total = 0;
	bool f_contribution_vanishes = false;

	std::vector<StratumVerdict> strata;
};

/// Number of legs not covered by any part of the stratum.
int uncovered_legs(const Stratum &mu, int k);

/// Dimension of X_mu: (n+1)d - 2l + n + k - k0 in general, and
/// (n+1)d + (n-3) + k - k0 when mu is a single pair (d, L_1).
long long stratum_dim(const Stratum &mu, int n, int d, int k);

/// Throws InputError when dim Q is not 2 or 3, or a stratum is not a
/// distribution of degree d and legs in [k].
AuditReport vanishing_verdicts(const CompleteIntersection &q, int d, int k, std::span<const Stratum> strata);

/// Every multiset {(d_i, L_i)} with d_i >= 1, sum d_i = d and pairwise
/// disjoint L_i inside [k].
std::vector<Stratum> all_strata(int d, int k);

} // namespace redgw
