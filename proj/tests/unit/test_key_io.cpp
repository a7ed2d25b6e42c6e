#include "mellin/error.hpp"
#include "mellin/key_io.hpp"

#include <doctest.h>

#include <clocale>
#include <random>
#include <string>

using namespace mellin;

namespace {

const std::string hello_key_file =
    "MELLIN-KEY-V1\n"
    "s=4\n"
    "n=5\n"
    "q1=7\n"
    "q2=23\n"
    "q3=332\n"
    "q4=2326\n"
    "q5=23261\n";

CipherKey make_key(std::int64_t s, std::initializer_list<long long> q)
{
    return CipherKey{SecretParameter(s), std::vector<BigInt>(q.begin(), q.end())};
}

Error read_key_error(const std::string& bytes)
{
    try {
        read_key(bytes);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected read_key to fail on: " << bytes);
    return Error(Errc::invalid_parameter, "unreachable");
}

} // namespace

TEST_CASE("write_key emits the canonical format")
{
    CHECK(write_key(make_key(4, {7, 23, 332, 2326, 23261})) == hello_key_file);
    CHECK(write_key(make_key(3, {})) == "MELLIN-KEY-V1\ns=3\nn=0\n");
    CHECK(write_key(make_key(3, {1, 4, 55, 332, 3}))
          == "MELLIN-KEY-V1\ns=3\nn=5\nq1=1\nq2=4\nq3=55\nq4=332\nq5=3\n");
}

TEST_CASE("read_key parses the canonical format")
{
    CHECK(read_key(hello_key_file) == make_key(4, {7, 23, 332, 2326, 23261}));
    CHECK(read_key("MELLIN-KEY-V1\ns=3\nn=0\n") == make_key(3, {}));
    CHECK(read_key("MELLIN-KEY-V1\ns=1\nn=1\nq1=0\n") == make_key(1, {0}));
}

TEST_CASE("read_key error classes")
{
    CHECK(read_key_error("").code() == Errc::bad_magic);
    CHECK(read_key_error("MELLIN-KEY-V2\ns=4\nn=0\n").code() == Errc::bad_magic);
    CHECK(read_key_error("mellin-key-v1\ns=4\nn=0\n").code() == Errc::bad_magic);

    const auto too_many = read_key_error("MELLIN-KEY-V1\ns=4\nn=2\nq1=7\nq2=23\nq3=332\n");
    CHECK(too_many.code() == Errc::count_mismatch);
    CHECK(too_many.position() == 6u);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=3\nq1=7\nq2=23\n").code() == Errc::count_mismatch);

    const auto leading_zero = read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq1=007\n");
    CHECK(leading_zero.code() == Errc::non_canonical_integer);
    CHECK(leading_zero.position() == 4u);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq1=+7\n").code() == Errc::non_canonical_integer);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq1=-7\n").code() == Errc::non_canonical_integer);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq1=\n").code() == Errc::non_canonical_integer);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=04\nn=0\n").code() == Errc::non_canonical_integer);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq1=1 2\n").code() == Errc::non_canonical_integer);

    CHECK(read_key_error("MELLIN-KEY-V1\nt=4\nn=0\n").code() == Errc::bad_field);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=0\nn=0\n").code() == Errc::bad_field);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\n").code() == Errc::bad_field);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=1\nq2=7\n").code() == Errc::bad_field);
    CHECK(read_key_error("MELLIN-KEY-V1\r\ns=4\nn=0\n").code() == Errc::bad_field);
    CHECK(read_key_error("MELLIN-KEY-V1\ns=4\nn=0").code() == Errc::bad_field);

    const auto trailing = read_key_error("MELLIN-KEY-V1\ns=4\nn=0\n\n");
    CHECK(trailing.code() == Errc::trailing_garbage);
    CHECK(trailing.position() == 4u);
    CHECK(read_key_error(hello_key_file + "junk").code() == Errc::trailing_garbage);
}

TEST_CASE("key round trip with large quotients is byte exact")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> digits(1, 70);
    std::uniform_int_distribution<int> count(0, 20);
    std::uniform_int_distribution<int> param(1, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        CipherKey key{SecretParameter(param(rng)), {}};
        for (int i = count(rng); i > 0; --i) {
            std::string text(1, static_cast<char>('1' + digit(rng) % 9));
            for (int d = digits(rng); d > 1; --d)
                text.push_back(static_cast<char>('0' + digit(rng)));
            key.quotients.push_back(parse_canonical_decimal(text));
        }
        const auto bytes = write_key(key);
        const auto back = read_key(bytes);
        CHECK(back == key);
        CHECK(write_key(back) == bytes);
    }
}

TEST_CASE("key parsing ignores the C locale setting")
{
    const auto* previous = std::setlocale(LC_ALL, nullptr);
    const std::string saved = previous ? previous : "C";
    std::setlocale(LC_ALL, "");
    CHECK(read_key(hello_key_file) == make_key(4, {7, 23, 332, 2326, 23261}));
    CHECK(write_key(make_key(4, {7, 23, 332, 2326, 23261})) == hello_key_file);
    std::setlocale(LC_ALL, saved.c_str());
}

TEST_CASE("ciphertext files")
{
    CHECK(write_ciphertext(CipherText::from_letters("JBHDN")) == "JBHDN\n");
    CHECK(write_ciphertext(CipherText{}) == "\n");
    CHECK(read_ciphertext("JBHDN\n").letters() == "JBHDN");
    CHECK(read_ciphertext("\n").residues.empty());

    auto offset_of = [](std::string_view bytes) {
        try {
            read_ciphertext(bytes);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::non_alphabet_character);
            return e.position().value_or(999);
        }
        FAIL("expected NonAlphabetCharacter");
        return std::size_t{999};
    };
    CHECK(offset_of("JB HDN\n") == 2u);
    CHECK(offset_of("JBhDN\n") == 2u);
    CHECK(offset_of("JBHDN") == 5u);
    CHECK(offset_of("JBHDN\n\n") == 5u);
    CHECK(offset_of("JBHDN\r\n") == 5u);
    CHECK(offset_of("") == 0u);
}
