#include "mellin/key_io.hpp"
#include "mellin/error.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace mellin {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view bytes) : bytes_(bytes) {}

    bool at_end() const noexcept { return pos_ == bytes_.size(); }
    std::size_t line_number() const noexcept { return line_; }

    // Next LF-terminated line without its terminator, or nullopt at end.
    std::optional<std::string_view> next()
    {
        if (at_end())
            return std::nullopt;
        ++line_;
        const auto end = bytes_.find('\n', pos_);
        if (end == std::string_view::npos)
            throw Error(Errc::bad_field, "line " + std::to_string(line_) + ": missing LF terminator", line_);
        auto line = bytes_.substr(pos_, end - pos_);
        pos_ = end + 1;
        if (line.find('\r') != std::string_view::npos)
            throw Error(Errc::bad_field, "line " + std::to_string(line_) + ": carriage return not allowed", line_);
        return line;
    }

    std::string_view rest() const noexcept { return bytes_.substr(pos_); }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

BigInt parse_value(std::string_view text, std::size_t line)
{
    try {
        return parse_canonical_decimal(text);
    } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what(), line);
    }
}

BigInt parse_field(std::optional<std::string_view> line, std::string_view name, std::size_t line_no)
{
    if (!line)
        throw Error(Errc::bad_field, "line " + std::to_string(line_no) + ": missing '" + std::string(name) + "' field",
                    line_no);
    if (line->substr(0, name.size()) != name)
        throw Error(Errc::bad_field, "line " + std::to_string(line_no) + ": expected '" + std::string(name) + "'",
                    line_no);
    return parse_value(line->substr(name.size()), line_no);
}

// "q<digits>=" prefix length, or 0 when the line has no such label.
std::size_t quotient_label_length(std::string_view line)
{
    if (line.size() < 3 || line.front() != 'q')
        return 0;
    std::size_t i = 1;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9')
        ++i;
    if (i == 1 || i >= line.size() || line[i] != '=')
        return 0;
    return i + 1;
}

} // namespace

std::string write_key(const CipherKey& key)
{
    std::string out;
    out.append(key_magic).push_back('\n');
    out += "s=" + std::to_string(key.s.value()) + '\n';
    out += "n=" + std::to_string(key.quotients.size()) + '\n';
    for (std::size_t i = 0; i < key.quotients.size(); ++i)
        out += 'q' + std::to_string(i + 1) + '=' + to_decimal(key.quotients[i]) + '\n';
    return out;
}

CipherKey read_key(std::string_view bytes)
{
    LineReader reader(bytes);

    const auto magic = reader.next();
    if (!magic || *magic != key_magic)
        throw Error(Errc::bad_magic, "line 1: expected '" + std::string(key_magic) + "'", 1);

    const auto s_value = parse_field(reader.next(), "s=", 2);
    if (s_value < 1 || s_value > std::numeric_limits<std::uint32_t>::max() / 2)
        throw Error(Errc::bad_field, "line 2: s out of range", 2);
    const SecretParameter s(s_value.convert_to<std::int64_t>());

    const auto n_value = parse_field(reader.next(), "n=", 3);
    if (n_value > std::numeric_limits<std::uint32_t>::max())
        throw Error(Errc::bad_field, "line 3: count out of range", 3);
    const auto count = n_value.convert_to<std::size_t>();

    CipherKey key{s, {}};
    for (std::size_t i = 1; i <= count; ++i) {
        const auto line_no = reader.line_number() + 1;
        const auto line = reader.next();
        if (!line)
            throw Error(Errc::count_mismatch,
                        "n=" + std::to_string(count) + " but only " + std::to_string(i - 1) + " quotient lines",
                        line_no);
        const auto expected = 'q' + std::to_string(i) + '=';
        if (line->substr(0, expected.size()) != expected)
            throw Error(Errc::bad_field, "line " + std::to_string(line_no) + ": expected '" + expected + "'", line_no);
        key.quotients.push_back(parse_value(line->substr(expected.size()), line_no));
    }

    if (!reader.at_end()) {
        const auto line_no = reader.line_number() + 1;
        const auto rest = reader.rest();
        const std::string_view next_line(rest.data(), static_cast<std::size_t>(
            std::find(rest.begin(), rest.end(), '\n') - rest.begin()));
        if (quotient_label_length(next_line) != 0)
            throw Error(Errc::count_mismatch,
                        "n=" + std::to_string(count) + " but more quotient lines follow", line_no);
        throw Error(Errc::trailing_garbage, "line " + std::to_string(line_no) + ": unexpected trailing data", line_no);
    }
    return key;
}

std::string write_ciphertext(const CipherText& ciphertext)
{
    auto out = ciphertext.letters();
    out.push_back('\n');
    return out;
}

CipherText read_ciphertext(std::string_view bytes)
{
    if (bytes.empty())
        throw Error(Errc::non_alphabet_character, "ciphertext is missing its LF terminator", 0);
    const auto body = bytes.substr(0, bytes.size() - 1);
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] < 'A' || body[i] > 'Z')
            throw Error(Errc::non_alphabet_character,
                        "byte offset " + std::to_string(i) + ": not an uppercase letter", i);
    }
    if (bytes.back() != '\n') {
        const auto offset = bytes.back() >= 'A' && bytes.back() <= 'Z' ? bytes.size() : bytes.size() - 1;
        throw Error(Errc::non_alphabet_character,
                    "byte offset " + std::to_string(offset) + ": expected LF terminator", offset);
    }
    return CipherText::from_letters(body);
}

} // namespace mellin
