#include "catcoh/scalar.hpp"

#include "catcoh/error.hpp"

#include <cctype>

namespace catcoh {

std::string_view to_string(Ring ring)
{
    return ring == Ring::Integers ? "Z" : "Q";
}

Ring parse_ring(std::string_view text)
{
    if (text == "Z" || text == "ZZ" || text == "integers")
        return Ring::Integers;
    if (text == "Q" || text == "QQ" || text == "rationals")
        return Ring::Rationals;
    fail(ErrorKind::InvalidInput, "unknown ring '" + std::string(text) + "' (expected Z or Q)");
}

std::string_view to_string(Variance variance)
{
    return variance == Variance::Covariant ? "covariant" : "contravariant";
}

namespace {

bool is_integer_literal(const std::string& s)
{
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        fail(ErrorKind::InvalidInput, "not a rational literal: '" + text + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    Integer d(den);
    if (d == 0)
        fail(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string format_rational(const Rational& q)
{
    if (is_integral(q))
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

} // namespace catcoh
