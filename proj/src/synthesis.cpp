#include "kbgen/synthesis.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace kbgen {

namespace {

std::string_view trim_ascii(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view value, std::string_view where) {
    std::uint64_t out = 0;
    if (value.empty()) throw data_error(std::string(where) + ": expected a nonnegative integer");
    for (char c : value) {
        if (c < '0' || c > '9')
            throw data_error(std::string(where) + ": expected a nonnegative integer, got `" +
                             std::string(value) + "`");
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

char32_t parse_single_char(std::string_view value, std::string_view where) {
    auto decoded = uni::decode_utf8(value);
    if (!decoded || decoded->size() != 1)
        throw data_error(std::string(where) + ": expected a single character, got `" +
                         std::string(value) + "`");
    return decoded->front();
}

} // namespace

void apply_config_line(SynthesisConfig& config, std::string_view line, std::string_view where) {
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
        throw data_error(std::string(where) + ": expected `key = value`");
    std::string key(trim_ascii(line.substr(0, eq)));
    std::string value(trim_ascii(line.substr(eq + 1)));

    if (key == "language_tag") {
        config.language_tag = value;
    } else if (key == "base_layout") {
        if (value.empty())
            config.base_layout.reset();
        else
            config.base_layout = value;
    } else if (key == "min_count") {
        config.min_count = parse_uint(value, where);
    } else if (key == "special_letter_threshold") {
        try {
            config.special_letter_threshold = std::stod(value);
        } catch (const std::exception&) {
            throw data_error(std::string(where) + ": bad threshold `" + value + "`");
        }
        if (config.special_letter_threshold < 0.0 || config.special_letter_threshold > 1.0)
            throw data_error(std::string(where) + ": threshold must be within [0, 1]");
    } else if (key == "currency_symbol") {
        if (value.empty())
            config.currency_symbol.reset();
        else
            config.currency_symbol = parse_single_char(value, where);
    } else if (key == "punctuation_limit") {
        config.punctuation_limit = static_cast<std::size_t>(parse_uint(value, where));
    } else if (key == "long_press_warn") {
        config.long_press_warn = static_cast<std::size_t>(parse_uint(value, where));
    } else {
        throw data_error(std::string(where) + ": unknown config key `" + key + "`");
    }
}

SynthesisConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    SynthesisConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = trim_ascii(line);
        if (view.empty() || view.front() == '#') continue;
        apply_config_line(config, view, path.string() + ":" + std::to_string(line_no));
    }
    return config;
}

std::string choose_base_layout(const CharacterTally& tally, const SynthesisConfig& config) {
    if (config.base_layout) return *config.base_layout;
    if (tally.total_letters > 0) {
        auto it = tally.letter_counts.find(U'ñ');
        if (it != tally.letter_counts.end()) {
            double share = static_cast<double>(it->second) / static_cast<double>(tally.total_letters);
            if (share >= config.special_letter_threshold) return "qwerty_n_tilde";
        }
    }
    return "qwerty";
}

std::vector<std::pair<char32_t, std::uint64_t>>
missing_characters(const CharacterTally& tally, const Layout& base, const SynthesisConfig& config) {
    std::set<char32_t> visible = visible_characters(base);
    auto ordered = latin_letters_by_frequency(tally, config.min_count);
    std::erase_if(ordered, [&visible](const auto& item) { return visible.contains(item.first); });
    return ordered;
}

namespace {

KeySlot* find_character_slot(LayoutView& view, char32_t ch) {
    for (auto& row : view.rows)
        for (auto& slot : row)
            if (slot.kind == KeySlot::Kind::character && slot.ch == ch) return &slot;
    return nullptr;
}

bool long_press_contains(const LayoutView& view, char32_t ch) {
    for (const auto& row : view.rows)
        for (const auto& slot : row)
            if (std::find(slot.long_press.begin(), slot.long_press.end(), ch) !=
                slot.long_press.end())
                return true;
    return false;
}

std::string char_label(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return "`" + uni::encode_utf8(cp) + "` (" + buf + ")";
}

} // namespace

Layout assign_long_presses(Layout base,
                           std::span<const std::pair<char32_t, std::uint64_t>> missing,
                           const SynthesisConfig& config,
                           SynthesisReport& report) {
    for (const auto& [ch, count] : missing) {
        if (long_press_contains(base.default_view, ch)) continue;
        auto attribution = base_key_for(ch);
        if (!attribution) {
            report.unplaceable.push_back(
                {ch, count, "no base key attribution within covered Unicode blocks"});
            continue;
        }
        KeySlot* slot = find_character_slot(base.default_view, attribution->base);
        if (!slot) {
            report.unplaceable.push_back(
                {ch, count, "base key `" + uni::encode_utf8(attribution->base) +
                                "` is not on the layout"});
            continue;
        }
        // Letters stay in global frequency order; any pre-existing non-letter
        // entries (the digit row) are pushed behind them.
        auto first_non_letter = std::find_if(
            slot->long_press.begin(), slot->long_press.end(),
            [](char32_t cp) { return !uni::is_letter(cp); });
        slot->long_press.insert(first_non_letter, ch);
        report.placements.push_back({ch, attribution->base, attribution->provenance});
    }

    for (const auto& row : base.default_view.rows) {
        for (const auto& slot : row) {
            if (slot.kind != KeySlot::Kind::character) continue;
            bool has_letter = false, has_other = false;
            for (char32_t cp : slot.long_press)
                (uni::is_letter(cp) ? has_letter : has_other) = true;
            if (has_letter && has_other)
                report.warnings.push_back("key " + char_label(slot.ch) +
                                          ": letter long-presses precede the digit entry");
            if (slot.long_press.size() > config.long_press_warn)
                report.warnings.push_back(
                    "key " + char_label(slot.ch) + ": " + std::to_string(slot.long_press.size()) +
                    " long-press entries exceed the threshold of " +
                    std::to_string(config.long_press_warn));
        }
    }
    return base;
}

Layout attach_punctuation(Layout layout, std::span<const char32_t> punctuation,
                          const SynthesisConfig& config) {
    KeySlot* target = nullptr;
    for (auto& row : layout.default_view.rows)
        for (auto& slot : row)
            if (slot.kind == KeySlot::Kind::punc_placeholder) {
                if (target) throw data_error("layout has more than one punctuation placeholder");
                target = &slot;
            }
    if (!target) throw data_error("layout has no punctuation placeholder key");

    std::set<char32_t> visible = visible_characters(layout);
    std::vector<char32_t> chosen;
    for (char32_t cp : punctuation) {
        if (chosen.size() >= config.punctuation_limit) break;
        if (visible.contains(uni::to_lower(cp))) continue;
        if (std::find(chosen.begin(), chosen.end(), cp) != chosen.end()) continue;
        chosen.push_back(cp);
    }
    if (config.currency_symbol && !visible.contains(uni::to_lower(*config.currency_symbol)) &&
        std::find(chosen.begin(), chosen.end(), *config.currency_symbol) == chosen.end())
        chosen.push_back(*config.currency_symbol);

    target->kind = KeySlot::Kind::character;
    target->long_press = std::move(chosen);
    return layout;
}

std::pair<Layout, SynthesisReport> synthesize(const CharacterTally& tally,
                                              const SynthesisConfig& config) {
    if (tally.letter_counts.empty())
        throw data_error("no Latin letters in the tally; nothing to design from");

    SynthesisReport report;
    report.base_layout_chosen = choose_base_layout(tally, config);

    Layout layout = builtin_base_layout(report.base_layout_chosen);
    auto missing = missing_characters(tally, layout, config);
    layout = assign_long_presses(std::move(layout), missing, config, report);
    layout = attach_punctuation(std::move(layout), punctuation_by_frequency(tally), config);
    layout.shift_view = derive_shift_view(layout.default_view);

    layout.name = config.language_tag.empty() ? report.base_layout_chosen : config.language_tag;
    layout.language_tag = config.language_tag;
    layout.currency_symbol = config.currency_symbol;

    for (auto [cp, count] : tally.rejected_letters) report.discarded_non_latin.emplace_back(cp, count);
    std::stable_sort(report.discarded_non_latin.begin(), report.discarded_non_latin.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                     });

    // Coverage check: every tallied letter at or above min_count must be
    // visible, a long-press, or reported unplaceable - exactly one.
    std::set<char32_t> visible = visible_characters(layout);
    for (const auto& [cp, count] : latin_letters_by_frequency(tally, config.min_count)) {
        int where = 0;
        if (visible.contains(cp)) ++where;
        if (long_press_contains(layout.default_view, cp)) ++where;
        for (const auto& entry : report.unplaceable)
            if (entry.character == cp) ++where;
        if (where != 1)
            throw data_error("internal: coverage invariant violated for " + char_label(cp));
    }

    validate_layout(layout);
    return {std::move(layout), std::move(report)};
}

std::string report_to_tsv(const SynthesisReport& report) {
    std::string out = "# synthesis report\n";
    out += "base_layout\t" + report.base_layout_chosen + "\n";
    for (const auto& p : report.placements) {
        out += "placement\t" + uni::encode_utf8(p.character) + "\t" + uni::encode_utf8(p.base) +
               "\t" + std::string(base_provenance_name(p.provenance)) + "\n";
    }
    for (const auto& u : report.unplaceable) {
        out += "unplaceable\t" + uni::encode_utf8(u.character) + "\t" + std::to_string(u.count) +
               "\t" + u.reason + "\n";
    }
    for (const auto& [cp, count] : report.discarded_non_latin)
        out += "discarded\t" + uni::encode_utf8(cp) + "\t" + std::to_string(count) + "\n";
    for (const auto& w : report.warnings) out += "warning\t" + w + "\n";
    return out;
}

} // namespace kbgen
