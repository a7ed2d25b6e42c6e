#include "mellin/mellin.h"

#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    mellin_string_free(s);
    return out;
}

} // namespace

TEST_CASE("C API: codec and arithmetic")
{
    int value = 0;
    CHECK(mellin_char_to_value('H', &value) == MELLIN_OK);
    CHECK(value == 8);
    CHECK(mellin_char_to_value('3', &value) == MELLIN_E_NON_ALPHABET);
    CHECK(std::strlen(mellin_last_error_message()) > 0);

    char c = 0;
    CHECK(mellin_value_to_char(14, &c) == MELLIN_OK);
    CHECK(c == 'N');
    CHECK(mellin_value_to_char(27, &c) == MELLIN_E_VALUE_OUT_OF_RANGE);

    char* decimal = nullptr;
    CHECK(mellin_factorial(25, &decimal) == MELLIN_OK);
    CHECK(take(decimal) == "15511210043330985984000000");
    CHECK(mellin_factorial(-1, &decimal) == MELLIN_E_NEGATIVE_ARGUMENT);

    std::vector<uint32_t> exps(5);
    CHECK(mellin_exponent_schedule(3, exps.data(), exps.size()) == MELLIN_OK);
    CHECK(exps == std::vector<uint32_t>{3, 4, 5, 6, 3});
    CHECK(mellin_exponent_schedule(0, exps.data(), exps.size()) == MELLIN_E_INVALID_PARAMETER);

    char* q = nullptr;
    int r = 0;
    CHECK(mellin_split_mod26("604800", &q, &r) == MELLIN_OK);
    CHECK(take(q) == "23261");
    CHECK(r == 14);
    CHECK(mellin_split_mod26("0", &q, &r) == MELLIN_E_NON_POSITIVE_INPUT);
    CHECK(mellin_split_mod26("012", &q, &r) == MELLIN_E_NON_CANONICAL_INTEGER);
}

TEST_CASE("C API: encrypt, serialize, read back and decrypt")
{
    char* ct = nullptr;
    mellin_key* key = nullptr;
    REQUIRE(mellin_encrypt("HELLO", 5, 4, 1, &ct, &key) == MELLIN_OK);
    const std::string letters = take(ct);
    CHECK(letters == "JBHDN");
    CHECK(mellin_key_s(key) == 4);
    REQUIRE(mellin_key_size(key) == 5);

    char* q = nullptr;
    CHECK(mellin_key_quotient(key, 4, &q) == MELLIN_OK);
    CHECK(take(q) == "23261");
    CHECK(mellin_key_quotient(key, 5, &q) == MELLIN_E_VALUE_OUT_OF_RANGE);

    char* bytes = nullptr;
    size_t length = 0;
    REQUIRE(mellin_key_write(key, &bytes, &length) == MELLIN_OK);
    const std::string file = take(bytes);
    CHECK(file.size() == length);
    CHECK(file == "MELLIN-KEY-V1\ns=4\nn=5\nq1=7\nq2=23\nq3=332\nq4=2326\nq5=23261\n");
    mellin_key_destroy(key);

    mellin_key* loaded = nullptr;
    REQUIRE(mellin_key_read(file.data(), file.size(), &loaded) == MELLIN_OK);
    char* plain = nullptr;
    CHECK(mellin_decrypt(letters.data(), letters.size(), loaded, &plain) == MELLIN_OK);
    CHECK(take(plain) == "HELLO");
    mellin_key_destroy(loaded);
}

TEST_CASE("C API: keys built by hand and error positions")
{
    mellin_key* key = nullptr;
    REQUIRE(mellin_key_create(4, &key) == MELLIN_OK);
    for (const char* q : {"7", "23", "332", "2326", "23260"})
        REQUIRE(mellin_key_push_quotient(key, q) == MELLIN_OK);
    CHECK(mellin_key_push_quotient(key, "07") == MELLIN_E_NON_CANONICAL_INTEGER);

    char* plain = nullptr;
    CHECK(mellin_decrypt("JBHDN", 5, key, &plain) == MELLIN_E_NOT_DIVISIBLE);
    CHECK(plain == nullptr);
    size_t position = 0;
    CHECK(mellin_last_error_position(&position) == 1);
    CHECK(position == 5);

    CHECK(mellin_decrypt("JBHD", 4, key, &plain) == MELLIN_E_LENGTH_MISMATCH);
    mellin_key_destroy(key);

    CHECK(mellin_key_create(0, &key) == MELLIN_E_INVALID_PARAMETER);
    CHECK(key == nullptr);

    const std::string bad = "MELLIN-KEY-V1\ns=4\nn=2\nq1=7\nq2=23\nq3=332\n";
    CHECK(mellin_key_read(bad.data(), bad.size(), &key) == MELLIN_E_COUNT_MISMATCH);
    CHECK(mellin_key_read("NOPE\n", 5, &key) == MELLIN_E_BAD_MAGIC);
}

TEST_CASE("C API: ciphertext files")
{
    char* bytes = nullptr;
    size_t length = 0;
    CHECK(mellin_ciphertext_write("JBHDN", 5, &bytes, &length) == MELLIN_OK);
    CHECK(length == 6);
    CHECK(take(bytes) == "JBHDN\n");

    char* letters = nullptr;
    CHECK(mellin_ciphertext_read("JBHDN\n", 6, &letters) == MELLIN_OK);
    CHECK(take(letters) == "JBHDN");
    CHECK(mellin_ciphertext_read("JB HDN\n", 7, &letters) == MELLIN_E_NON_ALPHABET);
    size_t offset = 0;
    CHECK(mellin_last_error_position(&offset) == 1);
    CHECK(offset == 2);
}

TEST_CASE("C API: recover_s")
{
    const char* quotients[] = {"7", "23", "332", "2326", "23261"};
    std::vector<uint32_t> found(32);
    size_t count = 0;
    REQUIRE(mellin_recover_s("JBHDN", 5, quotients, 5, 32, found.data(), found.size(), &count) == MELLIN_OK);
    found.resize(count);
    CHECK(std::find(found.begin(), found.end(), 4u) != found.end());

    // Count is reported even when the buffer is too small.
    size_t total = 0;
    CHECK(mellin_recover_s("", 0, nullptr, 0, 5, nullptr, 0, &total) == MELLIN_OK);
    CHECK(total == 5);

    CHECK(mellin_recover_s("JBHDN", 5, quotients, 4, 32, found.data(), found.size(), &count)
          == MELLIN_E_LENGTH_MISMATCH);
}

TEST_CASE("C API: oracle")
{
    mellin_oracle_result result{};
    char* exact = nullptr;
    REQUIRE(mellin_numeric_mellin(5, 4, 0, &result, &exact) == MELLIN_OK);
    CHECK(take(exact) == "40320");
    CHECK(result.exponent == 8);
    CHECK(result.numeric == doctest::Approx(40320.0));
    CHECK(result.log_space == 0);

    CHECK(mellin_numeric_mellin(30, 30, 0, &result, nullptr) == MELLIN_E_EXACTNESS_BOUND_EXCEEDED);
    CHECK(mellin_numeric_mellin(30, 30, 80, &result, nullptr) == MELLIN_OK);
    CHECK(result.log_space == 1);

    int ok = 0;
    CHECK(mellin_gamma_identity_check(5, 8, 1e-9, &ok) == MELLIN_OK);
    CHECK(ok == 1);
    CHECK(mellin_scaling_check(0.5, 3, 2, 1e-8, &ok) == MELLIN_OK);
    CHECK(ok == 1);
    CHECK(mellin_scaling_check(0.0, 3, 2, 1e-8, &ok) == MELLIN_E_INVALID_SCALE);
    CHECK(mellin_shift_check(3, 2, 4, 1e-9, &ok) == MELLIN_OK);
    CHECK(ok == 1);
    CHECK(mellin_default_tolerance(15) == 1e-9);
}

TEST_CASE("C API: null arguments are rejected")
{
    CHECK(mellin_char_to_value('A', nullptr) == MELLIN_E_NULL_ARGUMENT);
    CHECK(mellin_encrypt("A", 1, 1, 1, nullptr, nullptr) == MELLIN_E_NULL_ARGUMENT);
    CHECK(mellin_key_write(nullptr, nullptr, nullptr) == MELLIN_E_NULL_ARGUMENT);
    CHECK(mellin_key_s(nullptr) == 0);
    mellin_key_destroy(nullptr);
    CHECK(std::string(mellin_status_name(MELLIN_E_NOT_DIVISIBLE)) == "NotDivisible");
}
