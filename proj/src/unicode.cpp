#include "kbgen/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/uscript.h>
#include <unicode/utf16.h>
#include <unicode/utf8.h>

#include <array>

namespace kbgen::uni {

namespace {

const UNormalizer2* nfc_instance() {
    UErrorCode status = U_ZERO_ERROR;
    const UNormalizer2* n = unorm2_getNFCInstance(&status);
    return U_SUCCESS(status) ? n : nullptr;
}

const UNormalizer2* nfd_instance() {
    UErrorCode status = U_ZERO_ERROR;
    const UNormalizer2* n = unorm2_getNFDInstance(&status);
    return U_SUCCESS(status) ? n : nullptr;
}

std::u16string to_utf16(std::u32string_view text) {
    std::u16string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (cp <= 0xFFFF) {
            out.push_back(static_cast<char16_t>(cp));
        } else {
            out.push_back(static_cast<char16_t>(U16_LEAD(cp)));
            out.push_back(static_cast<char16_t>(U16_TRAIL(cp)));
        }
    }
    return out;
}

std::u32string from_utf16(std::u16string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        UChar32 cp;
        U16_NEXT(text.data(), i, text.size(), cp);
        out.push_back(static_cast<char32_t>(cp));
    }
    return out;
}

std::u32string normalize(const UNormalizer2* norm, std::u32string_view text) {
    if (!norm || text.empty()) return std::u32string(text);
    std::u16string src = to_utf16(text);
    UErrorCode status = U_ZERO_ERROR;
    int32_t needed = unorm2_normalize(norm, src.data(), static_cast<int32_t>(src.size()), nullptr, 0, &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) return std::u32string(text);
    std::u16string dst(static_cast<std::size_t>(needed), u'\0');
    status = U_ZERO_ERROR;
    unorm2_normalize(norm, src.data(), static_cast<int32_t>(src.size()),
                     dst.data(), needed, &status);
    if (U_FAILURE(status)) return std::u32string(text);
    return from_utf16(dst);
}

} // namespace

std::optional<std::u32string> decode_utf8(std::string_view bytes, std::size_t* error_offset) {
    std::u32string out;
    out.reserve(bytes.size());
    const auto* data = reinterpret_cast<const uint8_t*>(bytes.data());
    int32_t i = 0;
    const int32_t n = static_cast<int32_t>(bytes.size());
    while (i < n) {
        int32_t start = i;
        UChar32 cp;
        U8_NEXT(data, i, n, cp);
        if (cp < 0) {
            if (error_offset) *error_offset = static_cast<std::size_t>(start);
            return std::nullopt;
        }
        out.push_back(static_cast<char32_t>(cp));
    }
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        uint8_t buf[U8_MAX_LENGTH];
        int32_t len = 0;
        UBool err = false;
        U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
        if (!err) out.append(reinterpret_cast<char*>(buf), static_cast<std::size_t>(len));
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    return encode_utf8(std::u32string_view(&cp, 1));
}

std::u32string nfc(std::u32string_view text) { return normalize(nfc_instance(), text); }
std::u32string nfd(std::u32string_view text) { return normalize(nfd_instance(), text); }

std::u32string nfd_of(char32_t cp) {
    return nfd(std::u32string_view(&cp, 1));
}

char32_t to_lower(char32_t cp) { return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))); }
char32_t to_upper(char32_t cp) { return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp))); }

bool is_letter(char32_t cp) {
    switch (u_charType(static_cast<UChar32>(cp))) {
    case U_UPPERCASE_LETTER:
    case U_LOWERCASE_LETTER:
    case U_TITLECASE_LETTER:
    case U_MODIFIER_LETTER:
    case U_OTHER_LETTER:
        return true;
    default:
        return false;
    }
}

bool is_punctuation(char32_t cp) {
    switch (u_charType(static_cast<UChar32>(cp))) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
        return true;
    default:
        return false;
    }
}

bool is_decimal_digit(char32_t cp) {
    return u_charType(static_cast<UChar32>(cp)) == U_DECIMAL_DIGIT_NUMBER;
}

bool is_whitespace(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_control(char32_t cp) {
    return u_charType(static_cast<UChar32>(cp)) == U_CONTROL_CHAR;
}

bool is_combining_mark(char32_t cp) {
    switch (u_charType(static_cast<UChar32>(cp))) {
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
        return true;
    default:
        return false;
    }
}

bool is_latin_script(char32_t cp) {
    UErrorCode status = U_ZERO_ERROR;
    UScriptCode script = uscript_getScript(static_cast<UChar32>(cp), &status);
    return U_SUCCESS(status) && script == USCRIPT_LATIN;
}

bool is_common_or_inherited_script(char32_t cp) {
    UErrorCode status = U_ZERO_ERROR;
    UScriptCode script = uscript_getScript(static_cast<UChar32>(cp), &status);
    return U_SUCCESS(status) && (script == USCRIPT_COMMON || script == USCRIPT_INHERITED);
}

std::string general_category(char32_t cp) {
    static constexpr std::array<const char*, 30> names = {
        "Cn", "Lu", "Ll", "Lt", "Lm", "Lo", "Mn", "Me", "Mc", "Nd",
        "Nl", "No", "Zs", "Zl", "Zp", "Cc", "Cf", "Co", "Cs", "Pd",
        "Ps", "Pe", "Pc", "Po", "Sm", "Sc", "Sk", "So", "Pi", "Pf",
    };
    auto type = static_cast<std::size_t>(u_charType(static_cast<UChar32>(cp)));
    return type < names.size() ? names[type] : "Cn";
}

std::string char_name(char32_t cp) {
    char buf[256];
    UErrorCode status = U_ZERO_ERROR;
    int32_t len = u_charName(static_cast<UChar32>(cp), U_UNICODE_CHAR_NAME, buf, sizeof buf, &status);
    if (U_FAILURE(status) || len <= 0) return {};
    return std::string(buf, static_cast<std::size_t>(len));
}

} // namespace kbgen::uni
