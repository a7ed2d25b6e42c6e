#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mellin {

using BigInt = boost::multiprecision::cpp_int;

/// k! exactly. Throws Errc::negative_argument for k < 0.
BigInt factorial(std::int64_t k);

/// Incrementally extended table of k!, owned by a single call context.
class FactorialTable {
public:
    FactorialTable() : table_{1} {}

    const BigInt& operator()(std::uint32_t k);

private:
    std::vector<BigInt> table_;
};

/// Parses a canonical nonnegative decimal: ASCII digits only, no sign, no
/// leading zeros except the literal "0". Throws Errc::non_canonical_integer.
BigInt parse_canonical_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

} // namespace mellin
