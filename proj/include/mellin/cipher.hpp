#pragma once

#include "mellin/bigint.hpp"
#include "mellin/codec.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mellin {

/// The shared secret s. Always >= 1.
class SecretParameter {
public:
    /// Throws Errc::invalid_parameter for s < 1.
    explicit SecretParameter(std::int64_t s);

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(SecretParameter, SecretParameter) = default;

private:
    std::uint32_t value_;
};

/// Factorial argument per message position.
using ExponentSchedule = std::vector<std::uint32_t>;

/// e_i = s + ((i - 1) mod (s + 1)) for 1-based position i. The schedule
/// restarts at s after reaching 2s.
ExponentSchedule exponent_schedule(SecretParameter s, std::size_t length);

/// G'_i = G_i * e_i!
std::vector<BigInt> transform_coefficients(std::span<const LetterValue> plain, SecretParameter s);

struct Mod26Split {
    BigInt quotient;
    LetterValue residue;
};

/// N = 26q + r with r in 1..26. A multiple of 26 maps to r = 26, q = N/26 - 1.
/// Throws Errc::non_positive_input for N < 1.
Mod26Split split_mod26(const BigInt& n);

struct CipherText {
    std::vector<LetterValue> residues;

    std::string letters() const { return decode_values(residues); }
    static CipherText from_letters(std::string_view letters);

    friend bool operator==(const CipherText&, const CipherText&) = default;
};

struct CipherKey {
    SecretParameter s;
    std::vector<BigInt> quotients;

    friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

struct Encryption {
    std::vector<BigInt> coefficients;
    CipherText ciphertext;
    CipherKey key;
};

Encryption encrypt(std::string_view plaintext, SecretParameter s,
                   CaseFolding folding = CaseFolding::fold);

/// q_i * 26 + r_i per position. Throws Errc::length_mismatch.
std::vector<BigInt> reconstruct_coefficients(const CipherText& ciphertext,
                                             std::span<const BigInt> quotients);

/// Recovers the letter values. Throws Errc::length_mismatch,
/// Errc::not_divisible or Errc::value_out_of_range; the latter two carry the
/// 1-based message position, matching the q<i> numbering of key files.
PlainValues decrypt_values(const CipherText& ciphertext, const CipherKey& key);

std::string decrypt(const CipherText& ciphertext, const CipherKey& key);

/// Every s in 1..max_s under which the ciphertext decrypts cleanly.
std::vector<std::uint32_t> recover_s(const CipherText& ciphertext,
                                     std::span<const BigInt> quotients,
                                     std::uint32_t max_s);

} // namespace mellin
