#include "kbgen/char_stats.hpp"

#include "kbgen/unicode.hpp"

#include <algorithm>

namespace kbgen {

void CharacterTally::add_text(std::u32string_view text, std::uint64_t weight) {
    for (char32_t raw : text) {
        if (uni::is_whitespace(raw)) continue;
        char32_t cp = uni::to_lower(raw);
        if (uni::is_letter(cp)) {
            if (uni::is_latin_script(cp)) {
                letter_counts[cp] += weight;
                total_letters += weight;
            } else if (uni::is_common_or_inherited_script(cp)) {
                other_counts[cp] += weight;
            } else {
                rejected_letters[cp] += weight;
            }
        } else if (uni::is_punctuation(cp)) {
            auto& entry = punct_counts[cp];
            entry.count += weight;
            if (entry.category.empty()) entry.category = uni::general_category(cp);
        } else if (uni::is_decimal_digit(cp)) {
            digit_counts[cp] += weight;
        } else {
            other_counts[cp] += weight;
        }
    }
}

void CharacterTally::merge(const CharacterTally& other) {
    for (auto [cp, n] : other.letter_counts) letter_counts[cp] += n;
    for (auto [cp, n] : other.rejected_letters) rejected_letters[cp] += n;
    for (auto& [cp, pc] : other.punct_counts) {
        auto& entry = punct_counts[cp];
        entry.count += pc.count;
        if (entry.category.empty()) entry.category = pc.category;
    }
    for (auto [cp, n] : other.digit_counts) digit_counts[cp] += n;
    for (auto [cp, n] : other.other_counts) other_counts[cp] += n;
    total_letters += other.total_letters;
}

bool CharacterTally::empty() const {
    return letter_counts.empty() && rejected_letters.empty() && punct_counts.empty() &&
           digit_counts.empty() && other_counts.empty();
}

CharacterTally tally(std::span<const CorpusDocument> documents,
                     std::span<const std::vector<WordFrequencyEntry>> wordlists) {
    CharacterTally result;
    for (const auto& doc : documents) result.add_text(doc.text, doc.weight);
    for (const auto& list : wordlists)
        for (const auto& entry : list) result.add_text(entry.word, entry.count);
    return result;
}

namespace {

template <typename Map, typename GetCount>
auto sorted_by_frequency(const Map& map, GetCount get_count) {
    std::vector<std::pair<char32_t, std::uint64_t>> items;
    items.reserve(map.size());
    for (const auto& [cp, value] : map) items.emplace_back(cp, get_count(value));
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return items;
}

} // namespace

std::vector<std::pair<char32_t, std::uint64_t>>
latin_letters_by_frequency(const CharacterTally& tally, std::uint64_t min_count) {
    auto items = sorted_by_frequency(tally.letter_counts, [](std::uint64_t n) { return n; });
    std::erase_if(items, [min_count](const auto& item) { return item.second < min_count; });
    return items;
}

std::vector<char32_t> punctuation_by_frequency(const CharacterTally& tally) {
    auto items = sorted_by_frequency(tally.punct_counts, [](const PunctCount& pc) { return pc.count; });
    std::vector<char32_t> out;
    out.reserve(items.size());
    for (const auto& [cp, count] : items) out.push_back(cp);
    return out;
}

std::string tally_to_tsv(const CharacterTally& tally) {
    std::string out;
    auto emit = [&out](std::string_view section, const auto& items, auto category_of) {
        if (items.empty()) return;
        out += "# ";
        out += section;
        out += '\n';
        for (const auto& [cp, value] : items) {
            out += uni::encode_utf8(cp);
            out += '\t';
            out += category_of(cp, value);
            out += '\t';
            if constexpr (std::is_same_v<std::decay_t<decltype(value)>, PunctCount>)
                out += std::to_string(value.count);
            else
                out += std::to_string(value);
            out += '\n';
        }
    };
    auto gc = [](char32_t cp, const auto&) { return uni::general_category(cp); };
    emit("letters", sorted_by_frequency(tally.letter_counts, [](std::uint64_t n) { return n; }), gc);
    emit("rejected letters", sorted_by_frequency(tally.rejected_letters, [](std::uint64_t n) { return n; }), gc);

    std::vector<std::pair<char32_t, PunctCount>> punct(tally.punct_counts.begin(), tally.punct_counts.end());
    std::stable_sort(punct.begin(), punct.end(), [](const auto& a, const auto& b) {
        if (a.second.count != b.second.count) return a.second.count > b.second.count;
        return a.first < b.first;
    });
    emit("punctuation", punct, [](char32_t, const PunctCount& pc) { return pc.category; });

    emit("digits", sorted_by_frequency(tally.digit_counts, [](std::uint64_t n) { return n; }), gc);
    emit("other", sorted_by_frequency(tally.other_counts, [](std::uint64_t n) { return n; }), gc);
    return out;
}

} // namespace kbgen
