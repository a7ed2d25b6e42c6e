#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mellin {

/// One alphabet character as its ordinal: A=1 ... Z=26.
class LetterValue {
public:
    static constexpr int min = 1;
    static constexpr int max = 26;

    /// Throws Errc::value_out_of_range unless 1 <= v <= 26.
    explicit LetterValue(int v);

    int value() const noexcept { return value_; }

    friend bool operator==(LetterValue, LetterValue) = default;

private:
    std::uint8_t value_;
};

using PlainValues = std::vector<LetterValue>;

enum class CaseFolding { fold, strict };

LetterValue char_to_value(char c);
char value_to_char(LetterValue v) noexcept;
char value_to_char(int v);

/// Maps text to letter values. With CaseFolding::fold, 'a'..'z' are accepted
/// as their uppercase counterparts. Any other byte is rejected with its index.
PlainValues encode_text(std::string_view text, CaseFolding folding = CaseFolding::fold);

std::string decode_values(std::span<const LetterValue> values);

/// Raw-integer variant; out-of-range entries are reported with their index.
std::string decode_values(std::span<const int> values);

} // namespace mellin
