#include "mellin/codec.hpp"
#include "mellin/error.hpp"

namespace mellin {

LetterValue::LetterValue(int v)
{
    if (v < min || v > max)
        throw Error(Errc::value_out_of_range, "letter value " + std::to_string(v) + " outside 1..26");
    value_ = static_cast<std::uint8_t>(v);
}

LetterValue char_to_value(char c)
{
    if (c < 'A' || c > 'Z')
        throw Error(Errc::non_alphabet_character,
                    "character code " + std::to_string(static_cast<unsigned char>(c)) + " is not in A..Z");
    return LetterValue(c - 'A' + 1);
}

char value_to_char(LetterValue v) noexcept
{
    return static_cast<char>('A' + v.value() - 1);
}

char value_to_char(int v)
{
    return value_to_char(LetterValue(v));
}

PlainValues encode_text(std::string_view text, CaseFolding folding)
{
    PlainValues values;
    values.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (folding == CaseFolding::fold && c >= 'a' && c <= 'z')
            c = static_cast<char>(c - 'a' + 'A');
        if (c < 'A' || c > 'Z')
            throw Error(Errc::non_alphabet_character,
                        "non-alphabet character at position " + std::to_string(i), i);
        values.emplace_back(c - 'A' + 1);
    }
    return values;
}

std::string decode_values(std::span<const LetterValue> values)
{
    std::string text;
    text.reserve(values.size());
    for (auto v : values)
        text.push_back(value_to_char(v));
    return text;
}

std::string decode_values(std::span<const int> values)
{
    std::string text;
    text.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < LetterValue::min || values[i] > LetterValue::max)
            throw Error(Errc::value_out_of_range,
                        "value " + std::to_string(values[i]) + " at position " + std::to_string(i)
                            + " outside 1..26",
                        i);
        text.push_back(static_cast<char>('A' + values[i] - 1));
    }
    return text;
}

} // namespace mellin
