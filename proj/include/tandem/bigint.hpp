#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tandem {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

// Natural logarithm of a positive integer, accurate to double precision
// even when the value does not fit in a double.
double log_bigint(const BigInt& v);

BigInt pow_bigint(unsigned base, unsigned exponent);

}  // namespace tandem
