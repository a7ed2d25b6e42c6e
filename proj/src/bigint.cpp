#include "mellin/bigint.hpp"
#include "mellin/error.hpp"

namespace mellin {

BigInt factorial(std::int64_t k)
{
    if (k < 0)
        throw Error(Errc::negative_argument, "factorial of negative argument " + std::to_string(k));
    BigInt result = 1;
    for (std::int64_t i = 2; i <= k; ++i)
        result *= i;
    return result;
}

const BigInt& FactorialTable::operator()(std::uint32_t k)
{
    while (table_.size() <= k) {
        const auto next = table_.size();
        table_.push_back(table_.back() * next);
    }
    return table_[k];
}

BigInt parse_canonical_decimal(std::string_view text)
{
    if (text.empty())
        throw Error(Errc::non_canonical_integer, "empty integer");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw Error(Errc::non_canonical_integer,
                        "non-digit in integer '" + std::string(text) + "'", i);
    }
    if (text.size() > 1 && text.front() == '0')
        throw Error(Errc::non_canonical_integer, "leading zero in integer '" + std::string(text) + "'", 0);

    BigInt value = 0;
    for (char c : text) {
        value *= 10;
        value += c - '0';
    }
    return value;
}

std::string to_decimal(const BigInt& value)
{
    return value.str();
}

} // namespace mellin
