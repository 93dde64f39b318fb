#pragma once

#include "kbgen/corpus.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kbgen {

struct PunctCount {
    std::uint64_t count = 0;
    std::string category; // Unicode general category alias, e.g. "Po"

    bool operator==(const PunctCount&) const = default;
};

// Case-insensitive per-character counts, partitioned the way the synthesis
// step consumes them: Latin letters, rejected (non-Latin) letters,
// punctuation, digits, everything else. Whitespace is not counted.
struct CharacterTally {
    std::map<char32_t, std::uint64_t> letter_counts;   // lowercase, script=Latin
    std::map<char32_t, std::uint64_t> rejected_letters; // letters in other scripts
    std::map<char32_t, PunctCount> punct_counts;
    std::map<char32_t, std::uint64_t> digit_counts;
    std::map<char32_t, std::uint64_t> other_counts;
    std::uint64_t total_letters = 0;

    void add_text(std::u32string_view text, std::uint64_t weight = 1);
    void merge(const CharacterTally& other);
    bool empty() const;

    bool operator==(const CharacterTally&) const = default;
};

CharacterTally tally(std::span<const CorpusDocument> documents,
                     std::span<const std::vector<WordFrequencyEntry>> wordlists);

// Latin letters sorted by descending count, ties broken by ascending code
// point; entries below min_count are dropped.
std::vector<std::pair<char32_t, std::uint64_t>>
latin_letters_by_frequency(const CharacterTally& tally, std::uint64_t min_count);

// Punctuation sorted the same way.
std::vector<char32_t> punctuation_by_frequency(const CharacterTally& tally);

// TSV report (`char<TAB>category<TAB>count`) for linguist review.
std::string tally_to_tsv(const CharacterTally& tally);

} // namespace kbgen
