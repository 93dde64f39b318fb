#pragma once

// Thin wrappers over ICU: UTF-8 codec, NFC/NFD normalization and the
// character property queries the rest of the toolchain needs. Everything
// here is pure and thread-safe.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kbgen::uni {

// Decodes strict UTF-8. On malformed input returns std::nullopt and stores
// the byte offset of the first bad sequence in *error_offset.
std::optional<std::u32string> decode_utf8(std::string_view bytes, std::size_t* error_offset = nullptr);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

// Canonical composition / full canonical decomposition.
std::u32string nfc(std::u32string_view text);
std::u32string nfd(std::u32string_view text);
std::u32string nfd_of(char32_t cp);

char32_t to_lower(char32_t cp); // simple case mappings, one scalar in/out
char32_t to_upper(char32_t cp);

bool is_letter(char32_t cp);
bool is_punctuation(char32_t cp); // general category Pc/Pd/Ps/Pe/Pi/Pf/Po
bool is_decimal_digit(char32_t cp);
bool is_whitespace(char32_t cp); // Unicode White_Space
bool is_control(char32_t cp);    // general category Cc
bool is_combining_mark(char32_t cp); // Mn/Mc/Me
bool is_latin_script(char32_t cp);
bool is_common_or_inherited_script(char32_t cp);

// Two-letter general category alias ("Ll", "Po", ...).
std::string general_category(char32_t cp);

// Unicode character name, empty when the code point has none.
std::string char_name(char32_t cp);

inline bool is_ascii_lower(char32_t cp) { return cp >= U'a' && cp <= U'z'; }

} // namespace kbgen::uni
