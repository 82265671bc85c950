#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace cobweb {

// All arithmetic in the library is exact. Integer is an arbitrary-precision
// integer, Rational an always-canonical (gcd-reduced) fraction.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integral(const Rational& r) {
    return denominator(r) == 1;
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    if (is_integral(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// "p/q" always, q >= 1.
inline std::string rational_to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Checked narrowing used when a big count has to index real storage.
inline std::size_t to_size_t(const Integer& v) {
    if (v < 0 || v > Integer(std::numeric_limits<std::size_t>::max()))
        throw std::overflow_error("value does not fit in size_t: " + v.str());
    return v.convert_to<std::size_t>();
}

}  // namespace cobweb
