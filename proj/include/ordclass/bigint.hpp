#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordclass {

/// Exact integer used for element counts and group orders that may exceed
/// 64 bits (e.g. #(2) = 2^{e+1} - 1 for large e).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned k)
{
    BigInt r = 1;
    r <<= k;
    return r;
}

inline std::string to_decimal(const BigInt& v)
{
    return v.str();
}

}  // namespace ordclass
