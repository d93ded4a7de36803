#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace flawset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact quotient; throws ConsistencyError when `den` does not divide `num`.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0)
        throw ConsistencyError(std::string(what) + ": zero denominator");
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw ConsistencyError(std::string(what) + ": " + num.str() + "/" + den.str() +
                               " is not an integer");
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

/// Always "p/q" with q > 0, including integers ("3/1").
inline std::string to_string(const Rational& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

/// Display-only rendering, 15 significant digits.
inline std::string to_decimal(const Rational& v) {
    using Dec = boost::multiprecision::cpp_dec_float_50;
    Dec num(boost::multiprecision::numerator(v));
    Dec den(boost::multiprecision::denominator(v));
    Dec q = num / den;
    return q.str(15, std::ios_base::fmtflags(0));
}

} // namespace flawset
