#pragma once

// Truncated graded-commutative rings with exact rational coefficients.
//
// A ring is presented by generators of positive degree, each optionally
// nilpotent (x^k = 0), and a top dimension above which every class vanishes.
// All generators are even (Chow classes), so the ring is commutative and no
// Koszul signs appear.

#include "redgw/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace redgw {

class RingError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

struct Generator
{
	std::string name;
	int degree = 1;
	/// x^nilpotency = 0; none means only degree truncation applies.
	std::optional<int> nilpotency;

	bool operator==(const Generator &) const = default;
};

using Exponents = std::vector<int>;

class RingPresentation
{
  public:
	RingPresentation(std::vector<Generator> generators, int top_dim,
	                 std::optional<Exponents> point_class = std::nullopt,
	                 Rational degree_normalization = 1);

	const std::vector<Generator> &generators() const { return generators_; }
	std::size_t size() const { return generators_.size(); }
	int top_dim() const { return top_dim_; }
	const std::optional<Exponents> &point_class() const { return point_class_; }
	const Rational &degree_normalization() const { return degree_normalization_; }

	std::optional<std::size_t> index_of(std::string_view name) const;
	std::size_t require_index(std::string_view name) const;

	/// Weighted degree of a monomial.
	int degree_of(const Exponents &e) const;

	/// Normal form of a monomial, or nullopt when a relation kills it.
	std::optional<Exponents> reduce(const Exponents &e) const;

	bool operator==(const RingPresentation &) const = default;

  private:
	std::vector<Generator> generators_;
	int top_dim_;
	std::optional<Exponents> point_class_;
	Rational degree_normalization_;
};

using Ring = std::shared_ptr<const RingPresentation>;

Ring make_ring(std::vector<Generator> generators, int top_dim,
               std::optional<Exponents> point_class = std::nullopt,
               Rational degree_normalization = 1);

/// Identical object or structurally equal presentation.
bool same_ring(const Ring &a, const Ring &b);

/// Monomial key, ordered by degree and then with earlier generators first.
struct Monomial
{
	int degree = 0;
	Exponents exponents;

	bool operator==(const Monomial &) const = default;
	bool operator<(const Monomial &other) const
	{
		if (degree != other.degree)
			return degree < other.degree;
		return exponents > other.exponents;
	}
};

class GradedClass
{
  public:
	using Terms = std::map<Monomial, Rational>;

	explicit GradedClass(Ring ring);

	static GradedClass constant(Ring ring, const Rational &value);
	static GradedClass generator(Ring ring, std::string_view name);
	static GradedClass monomial(Ring ring, Exponents exponents, const Rational &coefficient = 1);

	const Ring &ring() const { return ring_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rational coefficient(const Exponents &e) const;
	Rational constant_term() const;

	/// Degree-k component.
	GradedClass homogeneous(int k) const;
	/// Largest degree with a nonzero term, or -1 for the zero class.
	int max_degree() const;

	GradedClass pow(int k) const;

	GradedClass &operator+=(const GradedClass &other);
	GradedClass &operator-=(const GradedClass &other);
	GradedClass &operator*=(const GradedClass &other);
	GradedClass &operator*=(const Rational &scalar);

	friend GradedClass operator+(GradedClass a, const GradedClass &b) { return a += b; }
	friend GradedClass operator-(GradedClass a, const GradedClass &b) { return a -= b; }
	friend GradedClass operator*(GradedClass a, const GradedClass &b) { return a *= b; }
	friend GradedClass operator*(GradedClass a, const Rational &s) { return a *= s; }
	friend GradedClass operator*(const Rational &s, GradedClass a) { return a *= s; }
	friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }

	GradedClass operator+(const Rational &s) const { return *this + constant(ring_, s); }
	GradedClass operator-(const Rational &s) const { return *this - constant(ring_, s); }
	friend GradedClass operator+(const Rational &s, const GradedClass &a) { return a + s; }
	friend GradedClass operator-(const Rational &s, const GradedClass &a) { return constant(a.ring_, s) - a; }

	bool operator==(const GradedClass &other) const;

	/// Canonical text form, e.g. "1 - 1/8 * alpha + 3 * beta - 1/4 * alpha * beta".
	std::string to_string() const;

  private:
	void add_term(const Exponents &e, const Rational &c);
	void require_same_ring(const GradedClass &other, const char *op) const;

	Ring ring_;
	Terms terms_;
};

GradedClass add(const GradedClass &a, const GradedClass &b);
GradedClass mul(const GradedClass &a, const GradedClass &b);

/// Coefficient of the point class times the ring's degree normalization.
/// Throws RingError if the ring designates no point class.
Rational degree(const GradedClass &a);

} // namespace redgw
