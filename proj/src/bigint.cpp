#include "tandem/bigint.hpp"

#include <cmath>

#include "tandem/errors.hpp"

namespace tandem {

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text)
{
    if (text.empty()) throw DomainError("empty integer");
    for (char c : text) {
        if (c < '0' || c > '9') throw DomainError("not a nonnegative integer: " + text);
    }
    return BigInt(text);
}

double log_bigint(const BigInt& v)
{
    if (v <= 0) throw DomainError("log of nonpositive integer");
    const auto bits = boost::multiprecision::msb(v);
    if (bits < 60) return std::log(v.convert_to<double>());
    const auto shift = bits - 60;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

BigInt pow_bigint(unsigned base, unsigned exponent)
{
    return boost::multiprecision::pow(BigInt(base), exponent);
}

}  // namespace tandem
