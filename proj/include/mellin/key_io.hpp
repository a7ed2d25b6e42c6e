#pragma once

#include "mellin/cipher.hpp"

#include <string>
#include <string_view>

namespace mellin {

inline constexpr std::string_view key_magic = "MELLIN-KEY-V1";

// Key file, LF-terminated ASCII lines:
//   MELLIN-KEY-V1
//   s=<decimal>
//   n=<count>
//   q1=<decimal> ... qn=<decimal>
std::string write_key(const CipherKey& key);

/// Errors carry the 1-based line number as position.
CipherKey read_key(std::string_view bytes);

/// Bare uppercase letters followed by one LF.
std::string write_ciphertext(const CipherText& ciphertext);

/// Errors carry the byte offset as position.
CipherText read_ciphertext(std::string_view bytes);

} // namespace mellin
