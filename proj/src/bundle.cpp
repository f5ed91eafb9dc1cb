#include "redgw/bundle.hpp"

#include <fmt/format.h>

namespace redgw {

BundleExpr::BundleExpr(int rank, GradedClass total_chern) : rank_(rank), total_chern_(std::move(total_chern))
{
	if (rank_ < 0)
		throw BundleError(fmt::format("negative rank {}", rank_));
	if (total_chern_.constant_term() != 1)
		throw BundleError("total Chern class must have constant term 1, got " + total_chern_.to_string());
	if (total_chern_.max_degree() > rank_)
		throw BundleError(fmt::format("Chern class of degree {} exceeds rank {}: {}", total_chern_.max_degree(), rank_,
		                              total_chern_.to_string()));
}

BundleExpr BundleExpr::trivial(Ring ring, int rank) { return BundleExpr(rank, GradedClass::constant(std::move(ring), 1)); }

BundleExpr BundleExpr::line(const GradedClass &c1) { return BundleExpr(1, c1 + Rational(1)); }

GradedClass invert_unit(const GradedClass &c)
{
	if (c.constant_term() != 1)
		throw BundleError("only classes with constant term 1 are inverted");
	// c = 1 + x with x nilpotent: 1/c = sum (-x)^j, which terminates because
	// every term of x has positive degree and the ring is truncated.
	const GradedClass minus_x = -(c - Rational(1));
	GradedClass result = GradedClass::constant(c.ring(), 1);
	GradedClass power = result;
	for (int j = 1; j <= c.ring()->top_dim(); ++j)
	{
		power *= minus_x;
		if (power.is_zero())
			break;
		result += power;
	}
	return result;
}

GradedClass total_segre(const BundleExpr &e) { return invert_unit(e.total_chern()); }

GradedClass segre(const BundleExpr &e, int i) { return total_segre(e).homogeneous(i); }

BundleExpr whitney_sum(std::span<const BundleExpr> parts)
{
	if (parts.empty())
		throw BundleError("whitney_sum of an empty list has no ring; use BundleExpr::trivial");
	int rank = 0;
	GradedClass chern = GradedClass::constant(parts.front().ring(), 1);
	for (const auto &p : parts)
	{
		if (!same_ring(p.ring(), chern.ring()))
			throw BundleError("ring mismatch in whitney_sum");
		rank += p.rank();
		chern *= p.total_chern();
	}
	return BundleExpr(rank, std::move(chern));
}

BundleExpr whitney_sum(const BundleExpr &a, const BundleExpr &b)
{
	const BundleExpr parts[] = {a, b};
	return whitney_sum(parts);
}

BundleExpr dual(const BundleExpr &e)
{
	GradedClass c(e.ring());
	for (int i = 0; i <= e.rank(); ++i)
		c += (i % 2 == 0 ? Rational(1) : Rational(-1)) * e.chern(i);
	return BundleExpr(e.rank(), std::move(c));
}

BundleExpr twist_by_line(const BundleExpr &e, const BundleExpr &l)
{
	if (l.rank() != 1)
		throw BundleError(fmt::format("twist_by_line needs a rank-1 bundle, got rank {}", l.rank()));
	if (!same_ring(e.ring(), l.ring()))
		throw BundleError("ring mismatch in twist_by_line");
	const int r = e.rank();
	const GradedClass x = l.chern(1);
	// c_k(E (x) L) = sum_i binom(r - i, k - i) c_i(E) x^(k - i)
	std::vector<GradedClass> x_pow{GradedClass::constant(e.ring(), 1)};
	for (int j = 1; j <= r; ++j)
		x_pow.push_back(x_pow.back() * x);
	GradedClass c(e.ring());
	for (int k = 0; k <= r; ++k)
		for (int i = 0; i <= k; ++i)
			c += binomial(r - i, k - i) * (e.chern(i) * x_pow[k - i]);
	return BundleExpr(r, std::move(c));
}

GradedClass euler_top(const BundleExpr &e) { return e.chern(e.rank()); }

namespace {

Ring completion_ring(const BundleExpr &a, const std::string &divisor_name)
{
	const auto &base = *a.ring();
	if (base.index_of(divisor_name))
		throw BundleError(fmt::format("divisor name '{}' collides with a base generator", divisor_name));
	auto gens = base.generators();
	gens.push_back(Generator{divisor_name, 1, std::nullopt});
	return make_ring(std::move(gens), base.top_dim() + a.rank());
}

} // namespace

ProjectiveCompletion::ProjectiveCompletion(BundleExpr a, std::string divisor_name)
    : bundle_(std::move(a)), total_(completion_ring(bundle_, divisor_name)), divisor_index_(base()->size()),
      segre_(total_segre(bundle_))
{
}

GradedClass ProjectiveCompletion::divisor() const
{
	return GradedClass::generator(total_, total_->generators()[divisor_index_].name);
}

GradedClass ProjectiveCompletion::pullback(const GradedClass &x) const
{
	if (!same_ring(x.ring(), base()))
		throw RingError("pullback of a class not over the base ring");
	GradedClass out(total_);
	for (const auto &[m, c] : x.terms())
	{
		Exponents e = m.exponents;
		e.push_back(0);
		out += GradedClass::monomial(total_, std::move(e), c);
	}
	return out;
}

BundleExpr ProjectiveCompletion::pullback(const BundleExpr &e) const
{
	return BundleExpr(e.rank(), pullback(e.total_chern()));
}

GradedClass ProjectiveCompletion::pushforward(const GradedClass &p) const
{
	if (!same_ring(p.ring(), total_))
		throw RingError("pushforward of a class not over the projective completion");
	const int m = bundle_.rank();
	GradedClass out(base());
	for (const auto &[mono, c] : p.terms())
	{
		const int i = mono.exponents[divisor_index_] - m;
		if (i < 0)
			continue;
		Exponents e(mono.exponents.begin(), mono.exponents.begin() + static_cast<std::ptrdiff_t>(divisor_index_));
		out += segre_.homogeneous(i) * GradedClass::monomial(base(), std::move(e), c);
	}
	return out;
}

GradedClass pushforward_proj(const GradedClass &p, const ProjectiveCompletion &bundle) { return bundle.pushforward(p); }

} // namespace redgw
