#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace kbgen {

// One loaded input text. The text is NFC-normalized, stripped of control
// characters (except newline/tab) and of orphan combining marks, so it can
// be fed straight into the tally.
struct CorpusDocument {
    std::string source_id;
    std::u32string text;
    std::uint64_t weight = 1;

    bool operator==(const CorpusDocument&) const = default;
};

struct WordFrequencyEntry {
    std::u32string word;
    std::uint64_t count = 0;

    bool operator==(const WordFrequencyEntry&) const = default;
};

// Loads a UTF-8 plain-text corpus file. BOM is stripped, the text is
// normalized as described on CorpusDocument. Throws kbgen::Error (io) for a
// missing file and (data) for invalid UTF-8, naming the byte offset.
CorpusDocument load_plain_text(const std::filesystem::path& path,
                               std::uint64_t weight = 1,
                               std::vector<std::string>* warnings = nullptr);

// Same pipeline applied to an in-memory buffer; source_id names the origin.
CorpusDocument load_plain_text_bytes(std::string_view bytes,
                                     std::string source_id,
                                     std::uint64_t weight = 1,
                                     std::vector<std::string>* warnings = nullptr);

// Loads a `word<TAB>count` frequency list. `#` comment lines and blank lines
// are skipped; malformed lines raise kbgen::Error (data) with the line number.
std::vector<WordFrequencyEntry> load_word_frequency_list(const std::filesystem::path& path,
                                                         std::vector<std::string>* warnings = nullptr);

std::vector<WordFrequencyEntry> load_word_frequency_bytes(std::string_view bytes,
                                                          std::string source_id,
                                                          std::vector<std::string>* warnings = nullptr);

} // namespace kbgen
