/*
 * C interface to the Mellin-transform cipher toolkit.
 *
 * Objects are opaque handles owned by the caller and released with their
 * matching _destroy function. Strings returned through char** out-parameters
 * are NUL-terminated, allocated by the library and released with
 * mellin_string_free. Every function returns a mellin_status; on failure a
 * message and an optional position (element index, byte offset or line) are
 * available from the calling thread via mellin_last_error_message and
 * mellin_last_error_position.
 */
#ifndef MELLIN_H
#define MELLIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MELLIN_BUILDING)
#    define MELLIN_API __declspec(dllexport)
#  else
#    define MELLIN_API __declspec(dllimport)
#  endif
#else
#  define MELLIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mellin_status {
    MELLIN_OK = 0,
    MELLIN_E_NON_ALPHABET = 1,
    MELLIN_E_VALUE_OUT_OF_RANGE = 2,
    MELLIN_E_INVALID_PARAMETER = 3,
    MELLIN_E_NEGATIVE_ARGUMENT = 4,
    MELLIN_E_NON_POSITIVE_INPUT = 5,
    MELLIN_E_LENGTH_MISMATCH = 6,
    MELLIN_E_NOT_DIVISIBLE = 7,
    MELLIN_E_BAD_MAGIC = 8,
    MELLIN_E_BAD_FIELD = 9,
    MELLIN_E_COUNT_MISMATCH = 10,
    MELLIN_E_NON_CANONICAL_INTEGER = 11,
    MELLIN_E_TRAILING_GARBAGE = 12,
    MELLIN_E_EXACTNESS_BOUND_EXCEEDED = 13,
    MELLIN_E_INVALID_SCALE = 14,
    MELLIN_E_NULL_ARGUMENT = 100,
    MELLIN_E_OUT_OF_MEMORY = 101,
    MELLIN_E_INTERNAL = 102
} mellin_status;

typedef struct mellin_key mellin_key;

MELLIN_API const char* mellin_version(void);
MELLIN_API const char* mellin_status_name(mellin_status status);

/* Diagnostics for the most recent failure on the calling thread. */
MELLIN_API const char* mellin_last_error_message(void);
/* Returns 1 and stores the position if the last failure carried one. */
MELLIN_API int mellin_last_error_position(size_t* position);

MELLIN_API void mellin_string_free(char* str);

/* ---- alphabet codec ---------------------------------------------------- */

MELLIN_API mellin_status mellin_char_to_value(char c, int* value);
MELLIN_API mellin_status mellin_value_to_char(int value, char* c);

/* ---- exact arithmetic --------------------------------------------------- */

/* k! as a decimal string. */
MELLIN_API mellin_status mellin_factorial(int64_t k, char** decimal);

/* Fills exponents[0..length) with the schedule for s. */
MELLIN_API mellin_status mellin_exponent_schedule(int64_t s, uint32_t* exponents, size_t length);

/* n = 26 q + r, r in 1..26; n and q are decimal strings. */
MELLIN_API mellin_status mellin_split_mod26(const char* n_decimal, char** quotient, int* residue);

/* ---- keys --------------------------------------------------------------- */

MELLIN_API mellin_status mellin_key_create(int64_t s, mellin_key** key);
MELLIN_API void mellin_key_destroy(mellin_key* key);
/* Appends a canonical nonnegative decimal quotient. */
MELLIN_API mellin_status mellin_key_push_quotient(mellin_key* key, const char* decimal);
MELLIN_API uint32_t mellin_key_s(const mellin_key* key);
MELLIN_API size_t mellin_key_size(const mellin_key* key);
MELLIN_API mellin_status mellin_key_quotient(const mellin_key* key, size_t index, char** decimal);

/* Key file serialization. */
MELLIN_API mellin_status mellin_key_write(const mellin_key* key, char** bytes, size_t* length);
MELLIN_API mellin_status mellin_key_read(const char* bytes, size_t length, mellin_key** key);

/* ---- cipher ------------------------------------------------------------- */

/* Encrypts plaintext[0..length). fold_case != 0 accepts lowercase letters.
 * Produces the bare ciphertext letters and a new key handle. */
MELLIN_API mellin_status mellin_encrypt(const char* plaintext, size_t length, int64_t s,
                                        int fold_case, char** ciphertext, mellin_key** key);

/* Decrypts ciphertext[0..length) (bare uppercase letters). */
MELLIN_API mellin_status mellin_decrypt(const char* ciphertext, size_t length,
                                        const mellin_key* key, char** plaintext);

/* Candidate values of s in 1..max_s. Writes up to capacity candidates in
 * ascending order; *count receives the total number found. */
MELLIN_API mellin_status mellin_recover_s(const char* ciphertext, size_t length,
                                          const char* const* quotients, size_t quotient_count,
                                          uint32_t max_s, uint32_t* candidates,
                                          size_t capacity, size_t* count);

/* Ciphertext file serialization: letters plus a single LF. */
MELLIN_API mellin_status mellin_ciphertext_write(const char* letters, size_t length,
                                                 char** bytes, size_t* out_length);
MELLIN_API mellin_status mellin_ciphertext_read(const char* bytes, size_t length, char** letters);

/* ---- transform oracle --------------------------------------------------- */

typedef struct mellin_oracle_result {
    double numeric;
    double relative_error;
    int log_space;
    uint32_t exponent;
} mellin_oracle_result;

/* max_exponent == 0 selects the default bound. exact_decimal may be NULL. */
MELLIN_API mellin_status mellin_numeric_mellin(uint32_t n, uint32_t s, uint32_t max_exponent,
                                               mellin_oracle_result* result,
                                               char** exact_decimal);
MELLIN_API double mellin_default_tolerance(uint32_t exponent);
MELLIN_API mellin_status mellin_gamma_identity_check(uint32_t n, uint32_t s, double tol, int* ok);
MELLIN_API mellin_status mellin_scaling_check(double a, uint32_t n, uint32_t s, double tol, int* ok);
MELLIN_API mellin_status mellin_shift_check(uint32_t a, uint32_t n, uint32_t s, double tol, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* MELLIN_H */
