#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace japprox {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

BigInt binomial(int n, int k);

} // namespace japprox
