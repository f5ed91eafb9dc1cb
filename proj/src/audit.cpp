#include "redgw/audit.hpp"

#include <fmt/format.h>

#include <functional>
#include <set>

namespace redgw {

void CompleteIntersection::validate() const
{
	if (n < 1)
		throw InputError(fmt::format("n = {} must be at least 1", n));
	for (int w : degrees)
		if (w < 1)
			throw InputError(fmt::format("degree {} must be at least 1", w));
	if (dimension() != 2 && dimension() != 3)
		throw InputError(fmt::format("dim Q = n - m = {} is outside the supported range {{2, 3}}", dimension()));
}

const char *to_string(Verdict v)
{
	return v == Verdict::survives ? "survives" : "vanishes_by_dimension";
}

int uncovered_legs(const Stratum &mu, int k) { return k - static_cast<int>(mu.legs().size()); }

long long stratum_dim(const Stratum &mu, int n, int d, int k)
{
	const long long k0 = uncovered_legs(mu, k);
	const long long base = static_cast<long long>(n + 1) * d + k - k0;
	if (mu.length() == 1 && mu.parts().front().degree == d)
		return base + (n - 3);
	return base - 2 * static_cast<long long>(mu.length()) + n;
}

AuditReport vanishing_verdicts(const CompleteIntersection &q, int d, int k, std::span<const Stratum> strata)
{
	q.validate();
	if (d < 1)
		throw InputError(fmt::format("d = {} must be at least 1", d));
	if (k < 0)
		throw InputError(fmt::format("k = {} must be non-negative", k));
	const long long n = q.n;
	const long long m = q.codimension();

	AuditReport r;
	r.target = q;
	r.d = d;
	r.k = k;
	r.rank_v1 = n + 1;
	r.rank_v2 = static_cast<long long>(d) * q.degree_sum() + m;
	r.dim_component = (d + 1) * (n + 1) + k - 2;
	r.dim_component_p = r.dim_component + m;
	r.dim_cone = (d + 1) * (n + 1) + k + m;
	r.dim_b = d * (n + 1) + k + m;
	r.dim_f_total = d * (n + 1) + k + m - 1;
	r.f_contribution_vanishes = r.dim_f_total < r.dim_b;

	for (const auto &mu : strata)
	{
		if (mu.total_degree() != d)
			throw InputError(fmt::format("stratum {} does not distribute degree {}", mu.to_string(), d));
		for (Leg l : mu.legs())
			if (l < 1 || l > k)
				throw InputError(fmt::format("stratum {} uses leg {} outside [{}]", mu.to_string(), l, k));
		StratumVerdict v{mu, uncovered_legs(mu, k), stratum_dim(mu, q.n, d, k), Verdict::vanishes_by_dimension};
		v.verdict = v.dim_x >= r.dim_b ? Verdict::survives : Verdict::vanishes_by_dimension;
		r.strata.push_back(std::move(v));
	}
	return r;
}

std::vector<Stratum> all_strata(int d, int k)
{
	if (d < 1 || k < 0 || k > 20)
		throw InputError("all_strata needs d >= 1 and 0 <= k <= 20");
	std::vector<StratumPart> candidates;
	for (int deg = 1; deg <= d; ++deg)
		for (unsigned mask = 0; mask < (1u << k); ++mask)
		{
			StratumPart p{deg, {}};
			for (int l = 0; l < k; ++l)
				if (mask & (1u << l))
					p.legs.push_back(l + 1);
			candidates.push_back(std::move(p));
		}
	std::sort(candidates.begin(), candidates.end());

	std::set<Stratum> found;
	std::vector<StratumPart> chosen;
	std::set<Leg> used;
	std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
		if (remaining == 0)
		{
			found.insert(Stratum(chosen));
			return;
		}
		for (std::size_t i = from; i < candidates.size(); ++i)
		{
			const auto &p = candidates[i];
			if (p.degree > remaining)
				continue;
			bool clash = false;
			for (Leg l : p.legs)
				clash = clash || used.count(l);
			if (clash)
				continue;
			chosen.push_back(p);
			used.insert(p.legs.begin(), p.legs.end());
			extend(i, remaining - p.degree);
			for (Leg l : p.legs)
				used.erase(l);
			chosen.pop_back();
		}
	};
	extend(0, d);
	return {found.begin(), found.end()};
}

} // namespace redgw
