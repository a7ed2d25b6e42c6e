#include "mellin/error.hpp"

namespace mellin {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::non_alphabet_character: return "NonAlphabetCharacter";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::negative_argument: return "NegativeArgument";
    case Errc::non_positive_input: return "NonPositiveInput";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::bad_magic: return "BadMagic";
    case Errc::bad_field: return "BadField";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::non_canonical_integer: return "NonCanonicalInteger";
    case Errc::trailing_garbage: return "TrailingGarbage";
    case Errc::exactness_bound_exceeded: return "ExactnessBoundExceeded";
    case Errc::invalid_scale: return "InvalidScale";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> position)
    : std::runtime_error(what), code_(code), position_(position)
{
}

} // namespace mellin
