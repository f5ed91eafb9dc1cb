#include "redgw/grassmann.hpp"

#include "redgw/complete_intersection.hpp"

#include <fmt/format.h>

namespace redgw {

DimensionError::DimensionError(int bundle_rank, int grassmannian_dim)
    : std::invalid_argument(fmt::format("bundle rank {} does not match dim G(2, n+1) = {}", bundle_rank,
                                        grassmannian_dim)),
      bundle_rank_(bundle_rank), grassmannian_dim_(grassmannian_dim)
{
}

namespace {

void require_n(int n)
{
	if (n < 1)
		throw InputError(fmt::format("n = {} must be at least 1", n));
}

void check_degrees(int n, std::span<const int> degrees)
{
	require_n(n);
	int rank = 0;
	for (int w : degrees)
	{
		if (w < 1)
			throw InputError(fmt::format("degree {} must be at least 1", w));
		rank += w + 1;
	}
	if (rank != 2 * (n - 1))
		throw DimensionError(rank, 2 * (n - 1));
}

Integer to_integer(const Rational &q)
{
	if (denominator(q) != 1)
		throw std::logic_error(fmt::format("line count {} is not integral", to_string(q)));
	return numerator(q);
}

} // namespace

Ring chern_root_ring(int n)
{
	require_n(n);
	return make_ring({{"x1", 1, std::nullopt}, {"x2", 1, std::nullopt}}, 2 * n, Exponents{n, n}, Rational(-1, 2));
}

Rational integrate_chern_roots(const GradedClass &phi, int n)
{
	const auto &ring = phi.ring();
	const auto vdm = GradedClass::generator(ring, "x1") - GradedClass::generator(ring, "x2");
	if (ring->top_dim() != 2 * n)
		throw std::invalid_argument("class does not live on the Chern-root ring of G(2, n+1)");
	return degree(phi * vdm.pow(2));
}

GradedClass sym_power_euler(const Ring &ring, int w)
{
	const auto x1 = GradedClass::generator(ring, "x1");
	const auto x2 = GradedClass::generator(ring, "x2");
	auto e = GradedClass::constant(ring, 1);
	for (int j = 0; j <= w; ++j)
		e *= x1 * Rational(w - j) + x2 * Rational(j);
	return e;
}

SchubertClass::SchubertClass(int n, std::map<std::pair<int, int>, Rational> coefficients) : n_(n)
{
	require_n(n);
	for (const auto &[ab, c] : coefficients)
		add(ab.first, ab.second, c);
}

SchubertClass SchubertClass::one(int n) { return SchubertClass(n, {{{0, 0}, Rational(1)}}); }

void SchubertClass::add(int a, int b, const Rational &c)
{
	if (b < 0 || a < b || a > n_ - 1)
		return;
	auto &slot = coefficients_[{a, b}];
	slot += c;
	if (slot == 0)
		coefficients_.erase({a, b});
}

SchubertClass SchubertClass::times_sigma1() const
{
	SchubertClass out(n_);
	for (const auto &[ab, c] : coefficients_)
	{
		out.add(ab.first + 1, ab.second, c);
		if (ab.second + 1 <= ab.first)
			out.add(ab.first, ab.second + 1, c);
	}
	return out;
}

SchubertClass SchubertClass::times_sigma11() const
{
	SchubertClass out(n_);
	for (const auto &[ab, c] : coefficients_)
		out.add(ab.first + 1, ab.second + 1, c);
	return out;
}

SchubertClass &SchubertClass::operator+=(const SchubertClass &other)
{
	if (other.n_ != n_)
		throw std::invalid_argument("Schubert classes on different Grassmannians");
	for (const auto &[ab, c] : other.coefficients_)
		add(ab.first, ab.second, c);
	return *this;
}

SchubertClass SchubertClass::operator*(const Rational &s) const
{
	SchubertClass out(n_);
	for (const auto &[ab, c] : coefficients_)
		out.add(ab.first, ab.second, c * s);
	return out;
}

Rational SchubertClass::integral() const
{
	const auto it = coefficients_.find({n_ - 1, n_ - 1});
	return it == coefficients_.end() ? Rational(0) : it->second;
}

ElementaryPolynomial to_elementary(std::map<std::pair<int, int>, Rational> symmetric)
{
	std::erase_if(symmetric, [](const auto &kv) { return kv.second == 0; });
	for (const auto &[ij, c] : symmetric)
	{
		const auto it = symmetric.find({ij.second, ij.first});
		if (it == symmetric.end() || it->second != c)
			throw std::invalid_argument(fmt::format("polynomial is not symmetric at x1^{} x2^{}", ij.first, ij.second));
	}
	ElementaryPolynomial out;
	while (!symmetric.empty())
	{
		// Largest key is the lex-leading term, which has i >= j by symmetry.
		const auto [lead, c] = *symmetric.rbegin();
		const int a = lead.first - lead.second;
		const int b = lead.second;
		out[{a, b}] += c;
		// Subtract c * e1^a * e2^b.
		for (int t = 0; t <= a; ++t)
		{
			const std::pair<int, int> key{t + b, a - t + b};
			auto &slot = symmetric[key];
			slot -= c * binomial(a, t);
			if (slot == 0)
				symmetric.erase(key);
		}
	}
	std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
	return out;
}

SchubertClass evaluate_in_schubert_basis(const ElementaryPolynomial &p, int n)
{
	SchubertClass total(n);
	for (const auto &[ij, c] : p)
	{
		auto s = SchubertClass::one(n);
		for (int i = 0; i < ij.first; ++i)
			s = s.times_sigma1();
		for (int j = 0; j < ij.second; ++j)
			s = s.times_sigma11();
		total += s * c;
	}
	return total;
}

Integer line_count(int n, std::span<const int> degrees)
{
	check_degrees(n, degrees);
	const Ring ring = chern_root_ring(n);
	auto phi = GradedClass::constant(ring, 1);
	for (int w : degrees)
		phi *= sym_power_euler(ring, w);
	return to_integer(integrate_chern_roots(phi, n));
}

Integer line_count_schubert(int n, std::span<const int> degrees)
{
	check_degrees(n, degrees);
	// Plain polynomial arithmetic in x1, x2, with no truncation.
	using Poly = std::map<std::pair<int, int>, Rational>;
	Poly phi{{{0, 0}, Rational(1)}};
	for (int w : degrees)
		for (int j = 0; j <= w; ++j)
		{
			Poly next;
			for (const auto &[ij, c] : phi)
			{
				next[{ij.first + 1, ij.second}] += c * (w - j);
				next[{ij.first, ij.second + 1}] += c * j;
			}
			phi = std::move(next);
		}
	return to_integer(evaluate_in_schubert_basis(to_elementary(std::move(phi)), n).integral());
}

Rational sigma1_top_power_chern_roots(int n)
{
	const Ring ring = chern_root_ring(n);
	const auto e1 = GradedClass::generator(ring, "x1") + GradedClass::generator(ring, "x2");
	return integrate_chern_roots(e1.pow(2 * (n - 1)), n);
}

Rational sigma1_top_power_schubert(int n)
{
	auto s = SchubertClass::one(n);
	for (int i = 0; i < 2 * (n - 1); ++i)
		s = s.times_sigma1();
	return s.integral();
}

} // namespace redgw
