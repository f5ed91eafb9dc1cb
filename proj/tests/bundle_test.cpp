#include "redgw/bundle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace redgw;

namespace {

Ring base() { return make_ring({{"alpha", 1, 2}, {"beta", 1, 2}}, 2, Exponents{1, 1}, 1); }

GradedClass gen(const Ring &r, const char *name) { return GradedClass::generator(r, name); }

} // namespace

TEST(Bundle, ValidatesChernClass)
{
	const auto r = base();
	EXPECT_THROW(BundleExpr(1, gen(r, "alpha")), BundleError);
	EXPECT_THROW(BundleExpr(1, gen(r, "alpha") * gen(r, "beta") + Rational(1)), BundleError);
	EXPECT_THROW(BundleExpr(-1, GradedClass::constant(r, 1)), BundleError);
	EXPECT_NO_THROW(BundleExpr(2, gen(r, "alpha") * gen(r, "beta") + Rational(1)));
}

TEST(Bundle, QuinticLineSegre)
{
	// c_1(L) = alpha/24 - 5 beta.
	const auto r = base();
	const auto l = BundleExpr::line(gen(r, "alpha") * Rational(1, 24) - gen(r, "beta") * Rational(5));
	EXPECT_EQ(total_segre(l).to_string(), "1 - 1/24 * alpha + 5 * beta - 5/12 * alpha * beta");
	EXPECT_EQ(segre(l, 2), gen(r, "alpha") * gen(r, "beta") * Rational(-5, 12));
}

TEST(Bundle, SegreInvertsChern)
{
	const auto r = make_ring({{"x", 1, std::nullopt}, {"y", 2, std::nullopt}}, 6);
	const auto c = gen(r, "x") * Rational(3) + gen(r, "y") - gen(r, "x") * gen(r, "y") + Rational(1);
	const BundleExpr e(3, c);
	EXPECT_EQ(total_segre(e) * c, GradedClass::constant(r, 1));
	EXPECT_THROW(invert_unit(gen(r, "x")), BundleError);
}

TEST(Bundle, WhitneyDualTwist)
{
	const auto r = make_ring({{"a", 1, std::nullopt}, {"b", 1, std::nullopt}, {"h", 1, std::nullopt}}, 6);
	const auto a = gen(r, "a"), b = gen(r, "b"), h = gen(r, "h");
	const auto la = BundleExpr::line(a), lb = BundleExpr::line(b), lh = BundleExpr::line(h);
	const std::vector<BundleExpr> parts{la, lb};
	const auto e = whitney_sum(parts);
	EXPECT_EQ(e.rank(), 2);
	EXPECT_EQ(e.total_chern(), (a + Rational(1)) * (b + Rational(1)));
	EXPECT_EQ(dual(e).total_chern(), (Rational(1) - a) * (Rational(1) - b));
	// Splitting principle: (La + Lb) (x) Lh has roots a + h, b + h.
	EXPECT_EQ(twist_by_line(e, lh).total_chern(), (a + h + Rational(1)) * (b + h + Rational(1)));
	EXPECT_EQ(euler_top(e), a * b);
	EXPECT_THROW(twist_by_line(e, e), BundleError);
	EXPECT_THROW(whitney_sum(std::span<const BundleExpr>{}), BundleError);
}

TEST(BundleProperty, TwistAgreesWithSplittingPrinciple)
{
	std::mt19937_64 rng(11);
	std::uniform_int_distribution<int> coef(-4, 4);
	const auto r = make_ring({{"u", 1, std::nullopt}, {"v", 1, std::nullopt}}, 5);
	const auto u = gen(r, "u"), v = gen(r, "v");
	for (int i = 0; i < 100; ++i)
	{
		std::vector<BundleExpr> lines;
		auto roots_product = GradedClass::constant(r, 1);
		const auto h = u * Rational(coef(rng)) + v * Rational(coef(rng), 3);
		const int rank = 1 + i % 4;
		for (int j = 0; j < rank; ++j)
		{
			const auto root = u * Rational(coef(rng)) + v * Rational(coef(rng));
			lines.push_back(BundleExpr::line(root));
			roots_product *= root + h + Rational(1);
		}
		const auto e = whitney_sum(lines);
		ASSERT_EQ(twist_by_line(e, BundleExpr::line(h)).total_chern(), roots_product);
		ASSERT_EQ(dual(dual(e)), e);
	}
}

TEST(Projective, PushforwardOfDivisorPowers)
{
	const auto r = base();
	const auto l1 = BundleExpr::line(gen(r, "alpha") * Rational(1, 24) - gen(r, "beta") * Rational(2));
	const auto l2 = BundleExpr::line(gen(r, "alpha") * Rational(1, 24) - gen(r, "beta") * Rational(3));
	const ProjectiveCompletion pc(whitney_sum(l1, l2));
	EXPECT_EQ(pc.total()->top_dim(), 4);
	const auto D = pc.divisor();
	EXPECT_TRUE(pc.pushforward(D).is_zero());
	EXPECT_EQ(pc.pushforward(D.pow(2)), GradedClass::constant(r, 1));
	EXPECT_EQ(pc.pushforward(D.pow(3)), segre(pc.bundle(), 1));
	EXPECT_EQ(pc.pushforward(D.pow(4)), segre(pc.bundle(), 2));
	const auto beta = pc.pullback(gen(r, "beta"));
	EXPECT_EQ(pc.pushforward(beta * D.pow(3)), gen(r, "beta") * segre(pc.bundle(), 1));
	EXPECT_EQ(pushforward_proj(D.pow(4), pc), pc.pushforward(D.pow(4)));
	EXPECT_THROW(pc.pushforward(gen(r, "alpha")), RingError);
}

TEST(Projective, TrivialBundleIsAProduct)
{
	// P(O^m + O) = B x P^m: D^m pushes to 1, higher powers to 0.
	const auto r = base();
	for (int m = 0; m <= 3; ++m)
	{
		const ProjectiveCompletion pc(BundleExpr::trivial(r, m));
		const auto D = pc.divisor();
		EXPECT_EQ(pc.pushforward(D.pow(m)), GradedClass::constant(r, 1));
		EXPECT_TRUE(pc.pushforward(D.pow(m + 1)).is_zero());
		EXPECT_TRUE(pc.pushforward(D.pow(m + 2)).is_zero());
	}
}
