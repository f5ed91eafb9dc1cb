#pragma once

// Formal vector bundles: a rank plus a total Chern class in some Chow ring.

#include "redgw/ring.hpp"

#include <span>
#include <stdexcept>
#include <string>

namespace redgw {

class BundleError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class BundleExpr
{
  public:
	/// Throws BundleError unless the constant term is 1 and c_i = 0 for i > rank.
	BundleExpr(int rank, GradedClass total_chern);

	static BundleExpr trivial(Ring ring, int rank);
	/// Rank-one bundle with the given first Chern class.
	static BundleExpr line(const GradedClass &c1);

	int rank() const { return rank_; }
	const Ring &ring() const { return total_chern_.ring(); }
	const GradedClass &total_chern() const { return total_chern_; }
	GradedClass chern(int i) const { return total_chern_.homogeneous(i); }

	bool operator==(const BundleExpr &) const = default;

  private:
	int rank_;
	GradedClass total_chern_;
};

/// Multiplicative inverse of a class with constant term 1 (geometric series).
GradedClass invert_unit(const GradedClass &c);

/// s(E) = c(E)^{-1}.
GradedClass total_segre(const BundleExpr &e);
GradedClass segre(const BundleExpr &e, int i);

BundleExpr whitney_sum(std::span<const BundleExpr> parts);
BundleExpr whitney_sum(const BundleExpr &a, const BundleExpr &b);

BundleExpr dual(const BundleExpr &e);

/// E (x) L for a line bundle L.
BundleExpr twist_by_line(const BundleExpr &e, const BundleExpr &l);

/// Top Chern class c_rank(E).
GradedClass euler_top(const BundleExpr &e);

/// The projective completion P(A + O) -> B of a bundle A of rank m over B,
/// with a formal divisor generator D appended to the Chow ring of B.
///
/// Pushforward is linear over the base and sends x * D^(m+i) to s_i(A) * x;
/// lower powers of D push forward to zero.
class ProjectiveCompletion
{
  public:
	explicit ProjectiveCompletion(BundleExpr a, std::string divisor_name = "D");

	const Ring &base() const { return bundle_.ring(); }
	const Ring &total() const { return total_; }
	const BundleExpr &bundle() const { return bundle_; }
	std::size_t divisor_index() const { return divisor_index_; }

	GradedClass divisor() const;
	GradedClass pullback(const GradedClass &x) const;
	BundleExpr pullback(const BundleExpr &e) const;
	GradedClass pushforward(const GradedClass &p) const;

  private:
	BundleExpr bundle_;
	Ring total_;
	std::size_t divisor_index_;
	GradedClass segre_;
};

GradedClass pushforward_proj(const GradedClass &p, const ProjectiveCompletion &bundle);

} // namespace redgw
