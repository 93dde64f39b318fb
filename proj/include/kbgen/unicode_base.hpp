#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kbgen {

enum class BaseProvenance { canonical_decomposition, fallback_table };

std::string_view base_provenance_name(BaseProvenance p);

// Answer to "which a-z key hosts this character as a long-press".
struct BaseKeyAttribution {
    char32_t character = 0;
    char32_t base = 0; // always a-z
    BaseProvenance provenance = BaseProvenance::canonical_decomposition;
    std::vector<char32_t> marks; // combining marks stripped on the way

    bool operator==(const BaseKeyAttribution&) const = default;
};

// The hardcoded dictionary for letters canonical decomposition cannot crack
// (ae -> a, sharp s -> s, ...). Entries are keyed by character; lookups fall
// back to the simple lowercase mapping so one lowercase row covers the
// cased variants.
class FallbackTable {
public:
    // Parses `char<TAB>base` lines; `#` starts a comment. Throws kbgen::Error
    // (data) with line numbers on malformed rows.
    static FallbackTable parse(std::string_view text, std::string_view source_id = "fallback table");
    static FallbackTable load(const std::string& path);

    // The table compiled in from data/base_fallback.tsv.
    static const FallbackTable& shipped();

    std::optional<char32_t> lookup(char32_t cp) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<char32_t, char32_t> entries_;
};

// Full recursive canonical decomposition; present when the case-folded
// leading scalar lands in a-z.
std::optional<BaseKeyAttribution> canonical_base(char32_t cp);

// The table in effect for defaulted lookups: the shipped one unless the
// process installed an override (CLI --fallback-table). Install before any
// concurrent work starts.
const FallbackTable& default_fallback_table();
void override_default_fallback_table(FallbackTable table);

std::optional<char32_t> fallback_base(char32_t cp,
                                      const FallbackTable& table = default_fallback_table());

// canonical_base first, then the fallback table applied to the leading
// scalar of the decomposition. Absent means the character cannot be
// attributed to any key; callers record that instead of aborting.
std::optional<BaseKeyAttribution> base_key_for(char32_t cp,
                                               const FallbackTable& table = default_fallback_table());

struct UnicodeBlock {
    char32_t first = 0;
    char32_t last = 0;
    std::string_view name;
};

// Latin-1 Supplement, Latin Extended-A, Latin Extended-B.
std::span<const UnicodeBlock> default_census_blocks();

struct CensusResult {
    std::size_t total_letters = 0;
    std::size_t decomposable = 0;
    std::size_t fallback = 0;
    std::vector<char32_t> uncovered;
};

CensusResult decomposition_census(std::span<const UnicodeBlock> blocks,
                                  const FallbackTable& table = default_fallback_table());

} // namespace kbgen
