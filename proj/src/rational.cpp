#include "redgw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace redgw {

std::string to_string(const Rational &q)
{
	const Integer num = boost::multiprecision::numerator(q);
	const Integer den = boost::multiprecision::denominator(q);
	if (den == 1)
		return num.str();
	return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
	std::size_t start = 0;
	if (!text.empty() && (text[0] == '-' || text[0] == '+'))
		start = 1;
	if (start == text.size())
		throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
	for (std::size_t i = start; i < text.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(text[i])))
			throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
	Integer value(std::string(text.substr(text[0] == '+' ? 1 : 0)));
	return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	const auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text, text));
	const Integer num = parse_integer(text.substr(0, slash), text);
	const auto den_text = text.substr(slash + 1);
	if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	const Integer den = parse_integer(den_text, text);
	if (den == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	return Rational(num, den);
}

Rational binomial(int n, int k)
{
	if (k < 0 || n < 0 || k > n)
		return Rational(0);
	Integer r = 1;
	for (int i = 0; i < k; ++i)
		r = r * (n - i) / (i + 1);
	return Rational(r);
}

} // namespace redgw
