// mellin-cipher: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 validation or corrupted input,
// 4 verification failure.

#include "mellin/mellin.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_io = 2,
    exit_invalid = 3,
    exit_verification = 4,
};

struct Failure {
    int code;
    std::string message;
};

struct StringDeleter {
    void operator()(char* p) const noexcept { mellin_string_free(p); }
};
using LibString = std::unique_ptr<char, StringDeleter>;

struct KeyDeleter {
    void operator()(mellin_key* k) const noexcept { mellin_key_destroy(k); }
};
using KeyHandle = std::unique_ptr<mellin_key, KeyDeleter>;

void check(mellin_status status, const std::string& context)
{
    if (status == MELLIN_OK)
        return;
    std::ostringstream msg;
    msg << context << ": " << mellin_status_name(status) << ": " << mellin_last_error_message();
    throw Failure{exit_invalid, msg.str()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{exit_io, "cannot open '" + path + "' for reading"};
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw Failure{exit_io, "error reading '" + path + "'"};
    return data;
}

void write_file(const std::string& path, std::string_view data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Failure{exit_io, "cannot open '" + path + "' for writing"};
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.flush())
        throw Failure{exit_io, "error writing '" + path + "'"};
}

struct EncryptOptions {
    std::int64_t s = 0;
    std::int64_t max_s_param = 64;
    std::string in, out, key_out;
    bool fold_case = true;
};

void run_encrypt(const EncryptOptions& opt)
{
    if (opt.s < 1 || opt.s > opt.max_s_param)
        throw Failure{exit_invalid, "s must lie in 1.." + std::to_string(opt.max_s_param)};

    auto plaintext = read_file(opt.in);
    if (!plaintext.empty() && plaintext.back() == '\n')
        plaintext.pop_back();

    char* ct_raw = nullptr;
    mellin_key* key_raw = nullptr;
    check(mellin_encrypt(plaintext.data(), plaintext.size(), opt.s, opt.fold_case ? 1 : 0, &ct_raw, &key_raw),
          "encrypt");
    LibString letters(ct_raw);
    KeyHandle key(key_raw);

    char* ct_bytes = nullptr;
    std::size_t ct_len = 0;
    check(mellin_ciphertext_write(letters.get(), std::char_traits<char>::length(letters.get()), &ct_bytes, &ct_len),
          "write ciphertext");
    LibString ct_file(ct_bytes);

    char* key_bytes = nullptr;
    std::size_t key_len = 0;
    check(mellin_key_write(key.get(), &key_bytes, &key_len), "write key");
    LibString key_file(key_bytes);

    write_file(opt.out, {ct_file.get(), ct_len});
    write_file(opt.key_out, {key_file.get(), key_len});
}

struct DecryptOptions {
    std::string key, in, out;
};

void run_decrypt(const DecryptOptions& opt)
{
    const auto key_bytes = read_file(opt.key);
    const auto ct_bytes = read_file(opt.in);

    mellin_key* key_raw = nullptr;
    check(mellin_key_read(key_bytes.data(), key_bytes.size(), &key_raw), "read key '" + opt.key + "'");
    KeyHandle key(key_raw);

    char* letters_raw = nullptr;
    check(mellin_ciphertext_read(ct_bytes.data(), ct_bytes.size(), &letters_raw),
          "read ciphertext '" + opt.in + "'");
    LibString letters(letters_raw);

    char* plain_raw = nullptr;
    check(mellin_decrypt(letters.get(), std::char_traits<char>::length(letters.get()), key.get(), &plain_raw),
          "decrypt");
    LibString plain(plain_raw);

    write_file(opt.out, std::string(plain.get()) + '\n');
}

struct VerifyOptions {
    std::uint32_t n_max = 6;
    std::uint32_t s_max = 6;
    std::optional<double> tol;
};

void run_verify(const VerifyOptions& opt)
{
    if (opt.tol && !(*opt.tol > 0.0))
        throw Failure{exit_usage, "--tol must be positive"};

    std::cout << std::left << std::setw(4) << "n" << std::setw(4) << "s" << std::setw(5) << "exp"
              << std::setw(26) << "numeric" << std::setw(52) << "exact" << std::setw(12) << "rel_error"
              << std::setw(9) << "tol" << "verdict\n";

    bool all_pass = true;
    for (std::uint32_t n = 1; n <= opt.n_max; ++n) {
        for (std::uint32_t s = 1; s <= opt.s_max; ++s) {
            mellin_oracle_result result{};
            char* exact_raw = nullptr;
            check(mellin_numeric_mellin(n, s, 0, &result, &exact_raw), "verify-transform");
            LibString exact(exact_raw);

            const double tol = opt.tol.value_or(mellin_default_tolerance(result.exponent));
            int ok = 0;
            check(mellin_gamma_identity_check(n, s, tol, &ok), "verify-transform");
            all_pass = all_pass && ok != 0;

            std::ostringstream numeric;
            numeric << std::setprecision(17) << result.numeric;
            std::ostringstream err;
            err << std::scientific << std::setprecision(2) << result.relative_error;
            std::ostringstream tol_text;
            tol_text << std::scientific << std::setprecision(0) << tol;

            std::cout << std::left << std::setw(4) << n << std::setw(4) << s << std::setw(5) << result.exponent
                      << std::setw(26) << numeric.str() << std::setw(52) << exact.get() << std::setw(12)
                      << err.str() << std::setw(9) << tol_text.str() << (ok ? "PASS" : "FAIL") << '\n';
        }
    }
    if (!all_pass)
        throw Failure{exit_verification, "one or more Gamma identity checks failed"};
}

struct RecoverOptions {
    std::string in;
    std::string quotients;
    std::uint32_t max_s = 0;
};

std::vector<std::string> split_commas(const std::string& list)
{
    std::vector<std::string> parts;
    if (list.empty())
        return parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = list.find(',', start);
        parts.push_back(list.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

void run_recover(const RecoverOptions& opt)
{
    const auto ct_bytes = read_file(opt.in);
    char* letters_raw = nullptr;
    check(mellin_ciphertext_read(ct_bytes.data(), ct_bytes.size(), &letters_raw),
          "read ciphertext '" + opt.in + "'");
    LibString letters(letters_raw);

    const auto parts = split_commas(opt.quotients);
    std::vector<const char*> quotients;
    quotients.reserve(parts.size());
    for (const auto& p : parts)
        quotients.push_back(p.c_str());

    std::vector<std::uint32_t> candidates(opt.max_s);
    std::size_t count = 0;
    check(mellin_recover_s(letters.get(), std::char_traits<char>::length(letters.get()), quotients.data(),
                           quotients.size(), opt.max_s, candidates.data(), candidates.size(), &count),
          "recover-s");
    for (std::size_t i = 0; i < count; ++i)
        std::cout << candidates[i] << '\n';
    if (count == 0)
        std::cerr << "no value of s in 1.." << opt.max_s << " is consistent with the input\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mellin-transform cipher toolkit"};
    app.require_subcommand(1);

    EncryptOptions enc;
    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a plaintext file, writing ciphertext and key files");
    encrypt->add_option("--s", enc.s, "Secret parameter s")->required();
    encrypt->add_option("--in", enc.in, "Plaintext input file")->required();
    encrypt->add_option("--out", enc.out, "Ciphertext output file")->required();
    encrypt->add_option("--key-out", enc.key_out, "Key output file")->required();
    encrypt->add_flag("--fold-case,!--no-fold-case", enc.fold_case, "Uppercase input before validation (default on)");
    encrypt->add_option("--max-s-param", enc.max_s_param, "Largest accepted s")->capture_default_str();

    DecryptOptions dec;
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file with a key file");
    decrypt->add_option("--key", dec.key, "Key file")->required();
    decrypt->add_option("--in", dec.in, "Ciphertext input file")->required();
    decrypt->add_option("--out", dec.out, "Plaintext output file")->required();

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify-transform", "Check the Gamma identity by quadrature over an (n, s) grid");
    verify->add_option("--n-max", ver.n_max, "Largest n")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--s-max", ver.s_max, "Largest s")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--tol", ver.tol, "Relative tolerance (default 1e-9, 1e-6 above exponent 15)");

    RecoverOptions rec;
    auto* recover = app.add_subcommand("recover-s", "List every s consistent with a ciphertext and its quotients");
    recover->add_option("--in", rec.in, "Ciphertext input file")->required();
    recover->add_option("--quotients", rec.quotients, "Comma-separated decimal quotients")->required();
    recover->add_option("--max-s", rec.max_s, "Largest s to try")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*encrypt)
            run_encrypt(enc);
        else if (*decrypt)
            run_decrypt(dec);
        else if (*verify)
            run_verify(ver);
        else if (*recover)
            run_recover(rec);
    } catch (const Failure& f) {
        std::cerr << "mellin-cipher: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "mellin-cipher: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}
