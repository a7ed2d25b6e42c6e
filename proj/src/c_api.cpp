#include "mellin/mellin.h"

#include "mellin/cipher.hpp"
#include "mellin/error.hpp"
#include "mellin/key_io.hpp"
#include "mellin/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <string_view>

struct mellin_key {
    mellin::CipherKey key;
};

namespace {

thread_local std::string last_message;
thread_local std::optional<std::size_t> last_position;

mellin_status to_status(mellin::Errc code) noexcept
{
    using mellin::Errc;
    switch (code) {
    case Errc::non_alphabet_character: return MELLIN_E_NON_ALPHABET;
    case Errc::value_out_of_range: return MELLIN_E_VALUE_OUT_OF_RANGE;
    case Errc::invalid_parameter: return MELLIN_E_INVALID_PARAMETER;
    case Errc::negative_argument: return MELLIN_E_NEGATIVE_ARGUMENT;
    case Errc::non_positive_input: return MELLIN_E_NON_POSITIVE_INPUT;
    case Errc::length_mismatch: return MELLIN_E_LENGTH_MISMATCH;
    case Errc::not_divisible: return MELLIN_E_NOT_DIVISIBLE;
    case Errc::bad_magic: return MELLIN_E_BAD_MAGIC;
    case Errc::bad_field: return MELLIN_E_BAD_FIELD;
    case Errc::count_mismatch: return MELLIN_E_COUNT_MISMATCH;
    case Errc::non_canonical_integer: return MELLIN_E_NON_CANONICAL_INTEGER;
    case Errc::trailing_garbage: return MELLIN_E_TRAILING_GARBAGE;
    case Errc::exactness_bound_exceeded: return MELLIN_E_EXACTNESS_BOUND_EXCEEDED;
    case Errc::invalid_scale: return MELLIN_E_INVALID_SCALE;
    }
    return MELLIN_E_INTERNAL;
}

mellin_status fail(mellin_status status, std::string message,
                   std::optional<std::size_t> position = std::nullopt)
{
    last_message = std::move(message);
    last_position = position;
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
mellin_status guarded(Body&& body) noexcept
{
    try {
        last_message.clear();
        last_position.reset();
        body();
        return MELLIN_OK;
    } catch (const mellin::Error& e) {
        return fail(to_status(e.code()), e.what(), e.position());
    } catch (const std::bad_alloc&) {
        return fail(MELLIN_E_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(MELLIN_E_INTERNAL, e.what());
    } catch (...) {
        return fail(MELLIN_E_INTERNAL, "unknown failure");
    }
}

char* duplicate(std::string_view text)
{
    auto* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, text.data(), text.size());
    out[text.size()] = '\0';
    return out;
}

std::string_view view(const char* data, std::size_t length)
{
    return length == 0 ? std::string_view{} : std::string_view{data, length};
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) noexcept
{
    return ((ptrs == nullptr) || ...);
}

mellin_status null_argument()
{
    return fail(MELLIN_E_NULL_ARGUMENT, "required pointer argument is null");
}

mellin_status check_tolerance_outputs(int* ok)
{
    return ok == nullptr ? null_argument() : MELLIN_OK;
}

} // namespace

extern "C" {

const char* mellin_version(void)
{
    return "1.0.0";
}

const char* mellin_status_name(mellin_status status)
{
    switch (status) {
    case MELLIN_OK: return "OK";
    case MELLIN_E_NON_ALPHABET: return "NonAlphabetCharacter";
    case MELLIN_E_VALUE_OUT_OF_RANGE: return "ValueOutOfRange";
    case MELLIN_E_INVALID_PARAMETER: return "InvalidParameter";
    case MELLIN_E_NEGATIVE_ARGUMENT: return "NegativeArgument";
    case MELLIN_E_NON_POSITIVE_INPUT: return "NonPositiveInput";
    case MELLIN_E_LENGTH_MISMATCH: return "LengthMismatch";
    case MELLIN_E_NOT_DIVISIBLE: return "NotDivisible";
    case MELLIN_E_BAD_MAGIC: return "BadMagic";
    case MELLIN_E_BAD_FIELD: return "BadField";
    case MELLIN_E_COUNT_MISMATCH: return "CountMismatch";
    case MELLIN_E_NON_CANONICAL_INTEGER: return "NonCanonicalInteger";
    case MELLIN_E_TRAILING_GARBAGE: return "TrailingGarbage";
    case MELLIN_E_EXACTNESS_BOUND_EXCEEDED: return "ExactnessBoundExceeded";
    case MELLIN_E_INVALID_SCALE: return "InvalidScale";
    case MELLIN_E_NULL_ARGUMENT: return "NullArgument";
    case MELLIN_E_OUT_OF_MEMORY: return "OutOfMemory";
    case MELLIN_E_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* mellin_last_error_message(void)
{
    return last_message.c_str();
}

int mellin_last_error_position(size_t* position)
{
    if (!last_position)
        return 0;
    if (position != nullptr)
        *position = *last_position;
    return 1;
}

void mellin_string_free(char* str)
{
    std::free(str);
}

mellin_status mellin_char_to_value(char c, int* value)
{
    if (value == nullptr)
        return null_argument();
    return guarded([&] { *value = mellin::char_to_value(c).value(); });
}

mellin_status mellin_value_to_char(int value, char* c)
{
    if (c == nullptr)
        return null_argument();
    return guarded([&] { *c = mellin::value_to_char(value); });
}

mellin_status mellin_factorial(int64_t k, char** decimal)
{
    if (decimal == nullptr)
        return null_argument();
    return guarded([&] { *decimal = duplicate(mellin::to_decimal(mellin::factorial(k))); });
}

mellin_status mellin_exponent_schedule(int64_t s, uint32_t* exponents, size_t length)
{
    if (exponents == nullptr && length != 0)
        return null_argument();
    return guarded([&] {
        const auto schedule = mellin::exponent_schedule(mellin::SecretParameter(s), length);
        std::copy(schedule.begin(), schedule.end(), exponents);
    });
}

mellin_status mellin_split_mod26(const char* n_decimal, char** quotient, int* residue)
{
    if (any_null(n_decimal, quotient, residue))
        return null_argument();
    return guarded([&] {
        const auto split = mellin::split_mod26(mellin::parse_canonical_decimal(n_decimal));
        *quotient = duplicate(mellin::to_decimal(split.quotient));
        *residue = split.residue.value();
    });
}

mellin_status mellin_key_create(int64_t s, mellin_key** key)
{
    if (key == nullptr)
        return null_argument();
    *key = nullptr;
    return guarded([&] { *key = new mellin_key{mellin::CipherKey{mellin::SecretParameter(s), {}}}; });
}

void mellin_key_destroy(mellin_key* key)
{
    delete key;
}

mellin_status mellin_key_push_quotient(mellin_key* key, const char* decimal)
{
    if (any_null(key, decimal))
        return null_argument();
    return guarded([&] { key->key.quotients.push_back(mellin::parse_canonical_decimal(decimal)); });
}

uint32_t mellin_key_s(const mellin_key* key)
{
    return key == nullptr ? 0 : key->key.s.value();
}

size_t mellin_key_size(const mellin_key* key)
{
    return key == nullptr ? 0 : key->key.quotients.size();
}

mellin_status mellin_key_quotient(const mellin_key* key, size_t index, char** decimal)
{
    if (any_null(key, decimal))
        return null_argument();
    if (index >= key->key.quotients.size())
        return fail(MELLIN_E_VALUE_OUT_OF_RANGE, "quotient index out of range", index);
    return guarded([&] { *decimal = duplicate(mellin::to_decimal(key->key.quotients[index])); });
}

mellin_status mellin_key_write(const mellin_key* key, char** bytes, size_t* length)
{
    if (any_null(key, bytes))
        return null_argument();
    return guarded([&] {
        const auto text = mellin::write_key(key->key);
        *bytes = duplicate(text);
        if (length != nullptr)
            *length = text.size();
    });
}

mellin_status mellin_key_read(const char* bytes, size_t length, mellin_key** key)
{
    if (key == nullptr || (bytes == nullptr && length != 0))
        return null_argument();
    *key = nullptr;
    return guarded([&] { *key = new mellin_key{mellin::read_key(view(bytes, length))}; });
}

mellin_status mellin_encrypt(const char* plaintext, size_t length, int64_t s, int fold_case,
                             char** ciphertext, mellin_key** key)
{
    if (any_null(ciphertext, key) || (plaintext == nullptr && length != 0))
        return null_argument();
    *ciphertext = nullptr;
    *key = nullptr;
    return guarded([&] {
        auto result = mellin::encrypt(view(plaintext, length), mellin::SecretParameter(s),
                                      fold_case ? mellin::CaseFolding::fold : mellin::CaseFolding::strict);
        auto* handle = new mellin_key{std::move(result.key)};
        try {
            *ciphertext = duplicate(result.ciphertext.letters());
        } catch (...) {
            delete handle;
            throw;
        }
        *key = handle;
    });
}

mellin_status mellin_decrypt(const char* ciphertext, size_t length, const mellin_key* key,
                             char** plaintext)
{
    if (any_null(key, plaintext) || (ciphertext == nullptr && length != 0))
        return null_argument();
    *plaintext = nullptr;
    return guarded([&] {
        const auto ct = mellin::CipherText::from_letters(view(ciphertext, length));
        *plaintext = duplicate(mellin::decrypt(ct, key->key));
    });
}

mellin_status mellin_recover_s(const char* ciphertext, size_t length, const char* const* quotients,
                               size_t quotient_count, uint32_t max_s, uint32_t* candidates,
                               size_t capacity, size_t* count)
{
    if (count == nullptr || (ciphertext == nullptr && length != 0)
        || (quotients == nullptr && quotient_count != 0) || (candidates == nullptr && capacity != 0))
        return null_argument();
    return guarded([&] {
        const auto ct = mellin::CipherText::from_letters(view(ciphertext, length));
        std::vector<mellin::BigInt> values;
        values.reserve(quotient_count);
        for (size_t i = 0; i < quotient_count; ++i) {
            if (quotients[i] == nullptr)
                throw mellin::Error(mellin::Errc::non_canonical_integer, "null quotient", i);
            values.push_back(mellin::parse_canonical_decimal(quotients[i]));
        }
        const auto found = mellin::recover_s(ct, values, max_s);
        for (size_t i = 0; i < found.size() && i < capacity; ++i)
            candidates[i] = found[i];
        *count = found.size();
    });
}

mellin_status mellin_ciphertext_write(const char* letters, size_t length, char** bytes,
                                      size_t* out_length)
{
    if (bytes == nullptr || (letters == nullptr && length != 0))
        return null_argument();
    return guarded([&] {
        const auto text = mellin::write_ciphertext(mellin::CipherText::from_letters(view(letters, length)));
        *bytes = duplicate(text);
        if (out_length != nullptr)
            *out_length = text.size();
    });
}

mellin_status mellin_ciphertext_read(const char* bytes, size_t length, char** letters)
{
    if (letters == nullptr || (bytes == nullptr && length != 0))
        return null_argument();
    return guarded([&] { *letters = duplicate(mellin::read_ciphertext(view(bytes, length)).letters()); });
}

mellin_status mellin_numeric_mellin(uint32_t n, uint32_t s, uint32_t max_exponent,
                                    mellin_oracle_result* result, char** exact_decimal)
{
    if (result == nullptr)
        return null_argument();
    return guarded([&] {
        mellin::oracle::Config config;
        if (max_exponent != 0)
            config.max_exponent = max_exponent;
        const auto r = mellin::oracle::numeric_mellin(n, s, config);
        result->numeric = r.numeric;
        result->relative_error = r.relative_error;
        result->log_space = r.log_space ? 1 : 0;
        result->exponent = s + n - 1;
        if (exact_decimal != nullptr)
            *exact_decimal = duplicate(mellin::to_decimal(r.exact));
    });
}

double mellin_default_tolerance(uint32_t exponent)
{
    return mellin::oracle::default_tolerance(exponent);
}

mellin_status mellin_gamma_identity_check(uint32_t n, uint32_t s, double tol, int* ok)
{
    if (auto st = check_tolerance_outputs(ok); st != MELLIN_OK)
        return st;
    return guarded([&] { *ok = mellin::oracle::gamma_identity_check(n, s, tol) ? 1 : 0; });
}

mellin_status mellin_scaling_check(double a, uint32_t n, uint32_t s, double tol, int* ok)
{
    if (auto st = check_tolerance_outputs(ok); st != MELLIN_OK)
        return st;
    return guarded([&] { *ok = mellin::oracle::scaling_check(a, n, s, tol) ? 1 : 0; });
}

mellin_status mellin_shift_check(uint32_t a, uint32_t n, uint32_t s, double tol, int* ok)
{
    if (auto st = check_tolerance_outputs(ok); st != MELLIN_OK)
        return st;
    return guarded([&] { *ok = mellin::oracle::shift_check(a, n, s, tol) ? 1 : 0; });
}

} // extern "C"
