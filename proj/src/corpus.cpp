#include "kbgen/corpus.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <fstream>
#include <sstream>

namespace kbgen {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("read failed for " + path.string());
    return std::move(buf).str();
}

void warn(std::vector<std::string>* warnings, std::string message) {
    if (warnings) warnings->push_back(std::move(message));
}

// A combining mark needs a base in front of it; marks at the start of the
// text or right after whitespace are defective and get dropped.
std::u32string drop_orphan_marks(std::u32string_view text,
                                 const std::string& source_id,
                                 std::vector<std::string>* warnings) {
    std::u32string out;
    out.reserve(text.size());
    bool have_base = false;
    for (char32_t cp : text) {
        if (uni::is_combining_mark(cp) && !have_base) {
            warn(warnings, source_id + ": dropped orphan combining mark U+" +
                               [cp] {
                                   char buf[16];
                                   std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
                                   return std::string(buf);
                               }());
            continue;
        }
        have_base = !uni::is_whitespace(cp);
        out.push_back(cp);
    }
    return out;
}

std::u32string normalize_text(std::string_view bytes,
                              const std::string& source_id,
                              std::size_t byte_base,
                              std::vector<std::string>* warnings) {
    std::size_t bad_offset = 0;
    auto decoded = uni::decode_utf8(bytes, &bad_offset);
    if (!decoded) {
        throw data_error(source_id + ": invalid UTF-8 at byte " +
                         std::to_string(byte_base + bad_offset));
    }
    std::u32string stripped;
    stripped.reserve(decoded->size());
    for (char32_t cp : *decoded) {
        if (uni::is_control(cp) && cp != U'\n' && cp != U'\t') continue;
        stripped.push_back(cp);
    }
    return drop_orphan_marks(uni::nfc(stripped), source_id, warnings);
}

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

} // namespace

CorpusDocument load_plain_text_bytes(std::string_view bytes,
                                     std::string source_id,
                                     std::uint64_t weight,
                                     std::vector<std::string>* warnings) {
    if (weight == 0) throw usage_error(source_id + ": document weight must be positive");
    std::size_t byte_base = 0;
    if (bytes.substr(0, kUtf8Bom.size()) == kUtf8Bom) {
        bytes.remove_prefix(kUtf8Bom.size());
        byte_base = kUtf8Bom.size();
    }
    CorpusDocument doc;
    doc.text = normalize_text(bytes, source_id, byte_base, warnings);
    doc.source_id = std::move(source_id);
    doc.weight = weight;
    return doc;
}

CorpusDocument load_plain_text(const std::filesystem::path& path,
                               std::uint64_t weight,
                               std::vector<std::string>* warnings) {
    return load_plain_text_bytes(read_file(path), path.string(), weight, warnings);
}

namespace {

std::u32string trim(std::u32string_view s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && uni::is_whitespace(s[begin])) ++begin;
    while (end > begin && uni::is_whitespace(s[end - 1])) --end;
    return std::u32string(s.substr(begin, end - begin));
}

} // namespace

std::vector<WordFrequencyEntry> load_word_frequency_bytes(std::string_view bytes,
                                                          std::string source_id,
                                                          std::vector<std::string>* warnings) {
    if (bytes.substr(0, kUtf8Bom.size()) == kUtf8Bom) bytes.remove_prefix(kUtf8Bom.size());

    std::vector<WordFrequencyEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        std::string_view line = bytes.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? bytes.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        auto where = [&] { return source_id + ":" + std::to_string(line_no); };
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            // tolerate whitespace-only lines, anything else is malformed
            bool blank = true;
            for (char c : line)
                if (c != ' ' && c != '\t') { blank = false; break; }
            if (blank) continue;
            throw data_error(where() + ": expected `word<TAB>count`");
        }
        std::string_view word_bytes = line.substr(0, tab);
        std::string_view count_bytes = line.substr(tab + 1);

        std::uint64_t count = 0;
        bool have_digit = false;
        for (char c : count_bytes) {
            if (c == ' ') continue;
            if (c < '0' || c > '9') throw data_error(where() + ": count is not a positive integer");
            count = count * 10 + static_cast<std::uint64_t>(c - '0');
            have_digit = true;
        }
        if (!have_digit) throw data_error(where() + ": count is not a positive integer");
        if (count == 0) throw data_error(where() + ": nonpositive count");

        CorpusDocument normalized =
            load_plain_text_bytes(word_bytes, where(), 1, warnings);
        std::u32string word = trim(normalized.text);
        if (word.empty()) throw data_error(where() + ": empty word");
        entries.push_back(WordFrequencyEntry{std::move(word), count});
    }
    return entries;
}

std::vector<WordFrequencyEntry> load_word_frequency_list(const std::filesystem::path& path,
                                                         std::vector<std::string>* warnings) {
    return load_word_frequency_bytes(read_file(path), path.string(), warnings);
}

} // namespace kbgen
