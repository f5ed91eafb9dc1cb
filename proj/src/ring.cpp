#include "redgw/ring.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <numeric>
#include <set>

namespace redgw {

RingPresentation::RingPresentation(std::vector<Generator> generators, int top_dim,
                                   std::optional<Exponents> point_class,
                                   Rational degree_normalization)
    : generators_(std::move(generators)), top_dim_(top_dim), point_class_(std::move(point_class)),
      degree_normalization_(std::move(degree_normalization))
{
	if (top_dim_ < 0)
		throw RingError("top_dim must be non-negative");
	std::set<std::string> names;
	for (const auto &g : generators_)
	{
		if (g.degree < 1)
			throw RingError(fmt::format("generator '{}' has degree {} < 1", g.name, g.degree));
		if (g.nilpotency && *g.nilpotency < 1)
			throw RingError(fmt::format("generator '{}' has nilpotency order {} < 1", g.name, *g.nilpotency));
		if (g.name.empty())
			throw RingError("generator names must be non-empty");
		if (!names.insert(g.name).second)
			throw RingError(fmt::format("duplicate generator name '{}'", g.name));
	}
	if (point_class_)
	{
		if (point_class_->size() != generators_.size())
			throw RingError("point class has the wrong number of exponents");
		for (int e : *point_class_)
			if (e < 0)
				throw RingError("point class has a negative exponent");
		if (degree_of(*point_class_) != top_dim_)
			throw RingError(fmt::format("point class has degree {} but top_dim is {}",
			                            degree_of(*point_class_), top_dim_));
		if (!reduce(*point_class_))
			throw RingError("point class is zero in the ring");
	}
}

std::optional<std::size_t> RingPresentation::index_of(std::string_view name) const
{
	for (std::size_t i = 0; i < generators_.size(); ++i)
		if (generators_[i].name == name)
			return i;
	return std::nullopt;
}

std::size_t RingPresentation::require_index(std::string_view name) const
{
	if (auto i = index_of(name))
		return *i;
	throw RingError(fmt::format("unknown generator '{}'", name));
}

int RingPresentation::degree_of(const Exponents &e) const
{
	int d = 0;
	for (std::size_t i = 0; i < e.size(); ++i)
		d += e[i] * generators_[i].degree;
	return d;
}

std::optional<Exponents> RingPresentation::reduce(const Exponents &e) const
{
	if (e.size() != generators_.size())
		throw RingError("monomial has the wrong number of exponents");
	for (std::size_t i = 0; i < e.size(); ++i)
	{
		if (e[i] < 0)
			throw RingError("negative exponent");
		if (generators_[i].nilpotency && e[i] >= *generators_[i].nilpotency)
			return std::nullopt;
	}
	if (degree_of(e) > top_dim_)
		return std::nullopt;
	return e;
}

Ring make_ring(std::vector<Generator> generators, int top_dim, std::optional<Exponents> point_class,
               Rational degree_normalization)
{
	return std::make_shared<const RingPresentation>(std::move(generators), top_dim, std::move(point_class),
	                                                std::move(degree_normalization));
}

bool same_ring(const Ring &a, const Ring &b)
{
	if (a == b)
		return true;
	if (!a || !b)
		return false;
	return *a == *b;
}

GradedClass::GradedClass(Ring ring) : ring_(std::move(ring))
{
	if (!ring_)
		throw RingError("class constructed without a ring");
}

GradedClass GradedClass::constant(Ring ring, const Rational &value)
{
	GradedClass c(std::move(ring));
	c.add_term(Exponents(c.ring_->size(), 0), value);
	return c;
}

GradedClass GradedClass::generator(Ring ring, std::string_view name)
{
	GradedClass c(std::move(ring));
	Exponents e(c.ring_->size(), 0);
	e[c.ring_->require_index(name)] = 1;
	c.add_term(e, 1);
	return c;
}

GradedClass GradedClass::monomial(Ring ring, Exponents exponents, const Rational &coefficient)
{
	GradedClass c(std::move(ring));
	c.add_term(exponents, coefficient);
	return c;
}

void GradedClass::add_term(const Exponents &e, const Rational &c)
{
	if (c == 0)
		return;
	auto reduced = ring_->reduce(e);
	if (!reduced)
		return;
	Monomial key{ring_->degree_of(*reduced), std::move(*reduced)};
	auto [it, inserted] = terms_.try_emplace(std::move(key), c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void GradedClass::require_same_ring(const GradedClass &other, const char *op) const
{
	if (!same_ring(ring_, other.ring_))
		throw RingError(fmt::format("ring mismatch in {}", op));
}

Rational GradedClass::coefficient(const Exponents &e) const
{
	auto reduced = ring_->reduce(e);
	if (!reduced)
		return 0;
	auto it = terms_.find(Monomial{ring_->degree_of(*reduced), *reduced});
	return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }

GradedClass GradedClass::homogeneous(int k) const
{
	GradedClass out(ring_);
	for (const auto &[m, c] : terms_)
		if (m.degree == k)
			out.terms_.emplace(m, c);
	return out;
}

int GradedClass::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

GradedClass GradedClass::pow(int k) const
{
	if (k < 0)
		throw RingError("negative power");
	GradedClass result = constant(ring_, 1);
	GradedClass base = *this;
	while (k > 0)
	{
		if (k & 1)
			result *= base;
		k >>= 1;
		if (k > 0)
			base *= base;
	}
	return result;
}

GradedClass &GradedClass::operator+=(const GradedClass &other)
{
	require_same_ring(other, "add");
	for (const auto &[m, c] : other.terms_)
		add_term(m.exponents, c);
	return *this;
}

GradedClass &GradedClass::operator-=(const GradedClass &other)
{
	require_same_ring(other, "subtract");
	for (const auto &[m, c] : other.terms_)
		add_term(m.exponents, -c);
	return *this;
}

GradedClass &GradedClass::operator*=(const GradedClass &other)
{
	require_same_ring(other, "mul");
	GradedClass product(ring_);
	Exponents e(ring_->size());
	for (const auto &[ma, ca] : terms_)
		for (const auto &[mb, cb] : other.terms_)
		{
			if (ma.degree + mb.degree > ring_->top_dim())
				continue;
			for (std::size_t i = 0; i < e.size(); ++i)
				e[i] = ma.exponents[i] + mb.exponents[i];
			product.add_term(e, ca * cb);
		}
	terms_ = std::move(product.terms_);
	return *this;
}

GradedClass &GradedClass::operator*=(const Rational &scalar)
{
	if (scalar == 0)
	{
		terms_.clear();
		return *this;
	}
	for (auto &[m, c] : terms_)
		c *= scalar;
	return *this;
}

bool GradedClass::operator==(const GradedClass &other) const
{
	return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string GradedClass::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[m, c] : terms_)
	{
		const bool negative = c < 0;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		const Rational magnitude = negative ? Rational(-c) : c;
		std::vector<std::string> factors;
		if (magnitude != 1 || m.degree == 0)
			factors.push_back(redgw::to_string(magnitude));
		for (std::size_t i = 0; i < m.exponents.size(); ++i)
		{
			const int e = m.exponents[i];
			if (e == 0)
				continue;
			factors.push_back(ring_->generators()[i].name + (e > 1 ? fmt::format("^{}", e) : ""));
		}
		out += fmt::format("{}", fmt::join(factors, " * "));
	}
	return out;
}

GradedClass add(const GradedClass &a, const GradedClass &b) { return a + b; }

GradedClass mul(const GradedClass &a, const GradedClass &b) { return a * b; }

Rational degree(const GradedClass &a)
{
	const auto &point = a.ring()->point_class();
	if (!point)
		throw RingError("ring has no designated point class");
	return a.coefficient(*point) * a.ring()->degree_normalization();
}

} // namespace redgw
