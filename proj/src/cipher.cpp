#include "mellin/cipher.hpp"
#include "mellin/error.hpp"

#include <limits>

namespace mellin {

namespace {

constexpr int modulus = 26;

// Value of G_i if G'_i / e_i! is exact and lands in 1..26. Shared by decrypt
// and recover_s so both apply the same acceptance rule.
enum class Recovery { ok, not_divisible, out_of_range };

Recovery recover_letter(const BigInt& coefficient, const BigInt& fact, int& letter)
{
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(coefficient, fact, quotient, remainder);
    if (remainder != 0)
        return Recovery::not_divisible;
    if (quotient < LetterValue::min || quotient > LetterValue::max)
        return Recovery::out_of_range;
    letter = quotient.convert_to<int>();
    return Recovery::ok;
}

} // namespace

SecretParameter::SecretParameter(std::int64_t s)
{
    if (s < 1 || s > std::numeric_limits<std::uint32_t>::max() / 2)
        throw Error(Errc::invalid_parameter, "secret parameter s=" + std::to_string(s) + " out of range");
    value_ = static_cast<std::uint32_t>(s);
}

ExponentSchedule exponent_schedule(SecretParameter s, std::size_t length)
{
    const std::uint64_t base = s.value();
    const std::uint64_t period = base + 1;
    ExponentSchedule exponents(length);
    for (std::size_t i = 0; i < length; ++i)
        exponents[i] = static_cast<std::uint32_t>(base + i % period);
    return exponents;
}

std::vector<BigInt> transform_coefficients(std::span<const LetterValue> plain, SecretParameter s)
{
    const auto exponents = exponent_schedule(s, plain.size());
    FactorialTable fact;
    std::vector<BigInt> coefficients;
    coefficients.reserve(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i)
        coefficients.push_back(plain[i].value() * fact(exponents[i]));
    return coefficients;
}

Mod26Split split_mod26(const BigInt& n)
{
    if (n < 1)
        throw Error(Errc::non_positive_input, "split_mod26 requires N >= 1");
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(n, BigInt(modulus), quotient, remainder);
    if (remainder == 0)
        return {quotient - 1, LetterValue(modulus)};
    return {std::move(quotient), LetterValue(remainder.convert_to<int>())};
}

CipherText CipherText::from_letters(std::string_view letters)
{
    return CipherText{encode_text(letters, CaseFolding::strict)};
}

Encryption encrypt(std::string_view plaintext, SecretParameter s, CaseFolding folding)
{
    const auto plain = encode_text(plaintext, folding);
    Encryption out{transform_coefficients(plain, s), {}, CipherKey{s, {}}};
    out.ciphertext.residues.reserve(plain.size());
    out.key.quotients.reserve(plain.size());
    for (const auto& coefficient : out.coefficients) {
        auto [quotient, residue] = split_mod26(coefficient);
        out.ciphertext.residues.push_back(residue);
        out.key.quotients.push_back(std::move(quotient));
    }
    return out;
}

std::vector<BigInt> reconstruct_coefficients(const CipherText& ciphertext,
                                             std::span<const BigInt> quotients)
{
    if (ciphertext.residues.size() != quotients.size())
        throw Error(Errc::length_mismatch,
                    "ciphertext has " + std::to_string(ciphertext.residues.size())
                        + " letters but key has " + std::to_string(quotients.size()) + " quotients");
    std::vector<BigInt> coefficients;
    coefficients.reserve(quotients.size());
    for (std::size_t i = 0; i < quotients.size(); ++i)
        coefficients.push_back(quotients[i] * modulus + ciphertext.residues[i].value());
    return coefficients;
}

PlainValues decrypt_values(const CipherText& ciphertext, const CipherKey& key)
{
    const auto coefficients = reconstruct_coefficients(ciphertext, key.quotients);
    const auto exponents = exponent_schedule(key.s, coefficients.size());
    FactorialTable fact;
    PlainValues plain;
    plain.reserve(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const auto position = i + 1;
        int letter = 0;
        switch (recover_letter(coefficients[i], fact(exponents[i]), letter)) {
        case Recovery::ok:
            plain.emplace_back(letter);
            break;
        case Recovery::not_divisible:
            throw Error(Errc::not_divisible,
                        "coefficient " + to_decimal(coefficients[i]) + " at position "
                            + std::to_string(position) + " is not a multiple of "
                            + std::to_string(exponents[i]) + "!",
                        position);
        case Recovery::out_of_range:
            throw Error(Errc::value_out_of_range,
                        "recovered letter at position " + std::to_string(position) + " outside 1..26",
                        position);
        }
    }
    return plain;
}

std::string decrypt(const CipherText& ciphertext, const CipherKey& key)
{
    return decode_values(decrypt_values(ciphertext, key));
}

std::vector<std::uint32_t> recover_s(const CipherText& ciphertext,
                                     std::span<const BigInt> quotients,
                                     std::uint32_t max_s)
{
    if (max_s < 1)
        throw Error(Errc::invalid_parameter, "max_s must be >= 1");
    const auto coefficients = reconstruct_coefficients(ciphertext, quotients);
    FactorialTable fact;
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t s = 1; s <= max_s; ++s) {
        const auto exponents = exponent_schedule(SecretParameter(s), coefficients.size());
        bool consistent = true;
        for (std::size_t i = 0; i < coefficients.size() && consistent; ++i) {
            int letter = 0;
            consistent = recover_letter(coefficients[i], fact(exponents[i]), letter) == Recovery::ok;
        }
        if (consistent)
            candidates.push_back(s);
    }
    return candidates;
}

} // namespace mellin
