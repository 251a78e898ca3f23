#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace catcoh {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Ring { Integers, Rationals };

std::string_view to_string(Ring ring);
Ring parse_ring(std::string_view text);

// Direction of a functor-valued datum relative to its index category.
enum class Variance { Covariant, Contravariant };

std::string_view to_string(Variance variance);

inline bool is_integral(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

// "p" or "p/q"; throws InvalidInput otherwise.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

} // namespace catcoh
