#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mellin {

enum class Errc {
    non_alphabet_character,
    value_out_of_range,
    invalid_parameter,
    negative_argument,
    non_positive_input,
    length_mismatch,
    not_divisible,
    bad_magic,
    bad_field,
    count_mismatch,
    non_canonical_integer,
    trailing_garbage,
    exactness_bound_exceeded,
    invalid_scale,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library. `position()` carries the offending
/// element index, byte offset or 1-based line number, depending on the
/// operation that threw.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt);

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Errc code_;
    std::optional<std::size_t> position_;
};

} // namespace mellin
