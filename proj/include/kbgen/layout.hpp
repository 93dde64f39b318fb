#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kbgen {

enum class SpecialKey { shift, del, space, enter };

std::string_view special_key_name(SpecialKey key); // "Shift", "Del", ...
std::optional<SpecialKey> special_key_from_name(std::string_view name);

// One key position. `character` slots hold exactly one scalar; the
// punc_placeholder slot is the (usually period) key whose long-press list
// gets filled with corpus punctuation during synthesis.
struct KeySlot {
    enum class Kind { empty, character, special, punc_placeholder };

    Kind kind = Kind::empty;
    char32_t ch = 0;                     // character / punc_placeholder
    SpecialKey special = SpecialKey::shift; // special only
    std::vector<char32_t> long_press;    // stored in frequency order

    bool operator==(const KeySlot&) const = default;

    static KeySlot empty_slot() { return {}; }
    static KeySlot character_slot(char32_t c, std::vector<char32_t> lp = {});
    static KeySlot special_slot(SpecialKey key);
    static KeySlot punc_slot(char32_t visible);
};

struct LayoutView {
    std::vector<std::vector<KeySlot>> rows; // rectangular

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }

    bool operator==(const LayoutView&) const = default;
};

struct Layout {
    std::string name;
    std::string language_tag; // BCP 47
    LayoutView default_view;
    LayoutView shift_view;
    std::optional<char32_t> currency_symbol;
    std::string base_layout_name;

    bool operator==(const Layout&) const = default;
};

// Uppercases slot contents and long-press entries; specials and caseless
// characters pass through unchanged.
LayoutView derive_shift_view(const LayoutView& view);

// Case-folded set of characters visible on the default view.
std::set<char32_t> visible_characters(const Layout& layout);

// Checks rectangularity, view-dimension agreement and the shift/default
// uppercase relation; throws kbgen::Error (data) when violated.
void validate_layout(const Layout& layout);

// CSV codec. The canonical serialized form is byte-stable: `\n` records,
// minimal quoting plus a quoted `[punc]` placeholder, and a `Shift layout`
// block only when the shift view is not derivable from the default view.
Layout parse_layout_csv(std::string_view text);
std::string serialize_layout_csv(const Layout& layout);

// Built-in base layouts: qwerty, qwerty_n_tilde, azerty, qwertz, dvorak,
// colemak. Unknown names raise kbgen::Error (usage) listing the valid ones.
Layout builtin_base_layout(std::string_view name);
std::span<const std::string_view> builtin_layout_names();

} // namespace kbgen
