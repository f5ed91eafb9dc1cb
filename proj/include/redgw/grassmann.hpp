#pragma once

// Lines on complete intersections: the Euler number of sum_i Sym^{deg f_i} S^vee
// over G(2, n+1), computed in two independent presentations of A*(G(2, n+1)).

#include "redgw/rational.hpp"
#include "redgw/ring.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <utility>

namespace redgw {

class DimensionError : public std::invalid_argument
{
  public:
	DimensionError(int bundle_rank, int grassmannian_dim);

	int bundle_rank() const { return bundle_rank_; }
	int grassmannian_dim() const { return grassmannian_dim_; }

  private:
	int bundle_rank_;
	int grassmannian_dim_;
};

/// Chern roots x1, x2 of S^vee on G(2, n+1). Integration is
/// -1/2 [x1^n x2^n] (phi * (x1 - x2)^2); `integrate_chern_roots` applies the
/// Vandermonde factor.
Ring chern_root_ring(int n);
Rational integrate_chern_roots(const GradedClass &phi, int n);

/// e(Sym^w S^vee) = prod_{j=0..w} ((w - j) x1 + j x2).
GradedClass sym_power_euler(const Ring &ring, int w);

/// A class in the Schubert basis sigma_{a,b}, n-1 >= a >= b >= 0.
class SchubertClass
{
  public:
	SchubertClass(int n, std::map<std::pair<int, int>, Rational> coefficients = {});

	static SchubertClass one(int n);

	int n() const { return n_; }
	const std::map<std::pair<int, int>, Rational> &coefficients() const { return coefficients_; }

	/// Pieri: sigma_1 * sigma_{a,b} = sigma_{a+1,b} + sigma_{a,b+1}.
	SchubertClass times_sigma1() const;
	/// sigma_{1,1} * sigma_{a,b} = sigma_{a+1,b+1}.
	SchubertClass times_sigma11() const;

	SchubertClass &operator+=(const SchubertClass &other);
	SchubertClass operator*(const Rational &s) const;

	/// Coefficient of the point class sigma_{n-1,n-1}.
	Rational integral() const;

  private:
	void add(int a, int b, const Rational &c);

	int n_;
	std::map<std::pair<int, int>, Rational> coefficients_;
};

/// A polynomial in c_1 = sigma_1 and c_2 = sigma_{1,1}, keyed by (i, j) for c_1^i c_2^j.
using ElementaryPolynomial = std::map<std::pair<int, int>, Rational>;

/// Rewrites a symmetric polynomial in x1, x2 (keyed by exponents) in terms of
/// e1 = x1 + x2, e2 = x1 x2. Throws std::invalid_argument if not symmetric.
ElementaryPolynomial to_elementary(std::map<std::pair<int, int>, Rational> symmetric);

SchubertClass evaluate_in_schubert_basis(const ElementaryPolynomial &p, int n);

/// Line count via Chern roots. Throws DimensionError unless
/// sum (deg_i + 1) = 2(n - 1).
Integer line_count(int n, std::span<const int> degrees);
/// Line count via the Pieri rule.
Integer line_count_schubert(int n, std::span<const int> degrees);

/// Integral of sigma_1^(2(n-1)) over G(2, n+1) in each presentation.
Rational sigma1_top_power_chern_roots(int n);
Rational sigma1_top_power_schubert(int n);

} // namespace redgw
