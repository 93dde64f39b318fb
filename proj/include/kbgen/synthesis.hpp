#pragma once

#include "kbgen/char_stats.hpp"
#include "kbgen/layout.hpp"
#include "kbgen/unicode_base.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kbgen {

struct SynthesisConfig {
    std::string language_tag;
    std::optional<std::string> base_layout; // explicit override
    std::uint64_t min_count = 1;
    double special_letter_threshold = 0.005; // n-tilde share of letters
    std::optional<char32_t> currency_symbol;
    std::size_t punctuation_limit = 8;
    std::size_t long_press_warn = 9;
};

// Reads `key = value` lines into a config; CLI flags override afterwards.
SynthesisConfig parse_config_file(const std::filesystem::path& path);
void apply_config_line(SynthesisConfig& config, std::string_view line, std::string_view where);

struct Placement {
    char32_t character = 0;
    char32_t base = 0;
    BaseProvenance provenance = BaseProvenance::canonical_decomposition;
};

struct UnplaceableChar {
    char32_t character = 0;
    std::uint64_t count = 0;
    std::string reason;
};

struct SynthesisReport {
    std::vector<std::pair<char32_t, std::uint64_t>> discarded_non_latin;
    std::vector<UnplaceableChar> unplaceable;
    std::vector<std::string> warnings;
    std::string base_layout_chosen;
    std::vector<Placement> placements;
};

std::string report_to_tsv(const SynthesisReport& report);

std::string choose_base_layout(const CharacterTally& tally, const SynthesisConfig& config);

// Tallied Latin letters not visible on the base layout, most frequent first.
std::vector<std::pair<char32_t, std::uint64_t>>
missing_characters(const CharacterTally& tally, const Layout& base, const SynthesisConfig& config);

// Routes each missing character to its base key's long-press list. Letters
// go in global frequency order ahead of any non-letter entries (the digit
// row); unattributable characters land in the report.
Layout assign_long_presses(Layout base,
                           std::span<const std::pair<char32_t, std::uint64_t>> missing,
                           const SynthesisConfig& config,
                           SynthesisReport& report);

// Fills the punc-placeholder key with corpus punctuation and the configured
// currency symbol; throws kbgen::Error (data) when the layout has no
// placeholder key.
Layout attach_punctuation(Layout layout, std::span<const char32_t> punctuation,
                          const SynthesisConfig& config);

std::pair<Layout, SynthesisReport> synthesize(const CharacterTally& tally,
                                              const SynthesisConfig& config);

} // namespace kbgen
