#ifndef STIGLEX_TEXT_H_
#define STIGLEX_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 and file helpers shared by the parsers and the scanner.
namespace stiglex::text {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first code unit
  std::size_t length;  // code units
};

// Invalid sequences decode to U+FFFD covering one byte, so offsets always
// advance and stay aligned with the input.
std::vector<CodePoint> decode_utf8(std::string_view s);
void append_utf8(std::string& out, char32_t cp);

char32_t fold_case(char32_t cp);
bool is_space(char32_t cp);
bool is_punct(char32_t cp);
// Letters, digits and the hyphen. Anything else is a word boundary.
bool is_word_char(char32_t cp);

// NFC followed by full lowercase mapping.
std::string lower_nfc(std::string_view s);

std::string_view trim(std::string_view s);
std::string lowercase_ascii(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

std::string read_file(const std::filesystem::path& path);

// Calls fn(line, 1-based line number) for every line. A trailing '\r' is
// removed so CRLF files parse like LF files.
void for_each_line(std::string_view content,
                   const std::function<void(std::string_view, std::size_t)>& fn);

// One CSV/TSV record with RFC 4180 quoting (no embedded newlines).
std::vector<std::string> split_record(std::string_view line, char delim);
// Quotes the field when it contains the delimiter, a quote or a newline.
std::string escape_field(std::string_view field, char delim = ',');

// Fixed-point rendering, e.g. format_fixed(3.63758, 4) == "3.6376".
std::string format_fixed(double value, int decimals);

}  // namespace stiglex::text

#endif  // STIGLEX_TEXT_H_
