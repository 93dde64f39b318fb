#include "kbgen/unicode_base.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include "fallback_table_data.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace kbgen {

std::string_view base_provenance_name(BaseProvenance p) {
    return p == BaseProvenance::canonical_decomposition ? "canonical-decomposition"
                                                        : "fallback-table";
}

FallbackTable FallbackTable::parse(std::string_view text, std::string_view source_id) {
    FallbackTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        if (line.empty()) continue;

        auto fail = [&](const std::string& message) -> void {
            throw data_error(std::string(source_id) + ":" + std::to_string(line_no) + ": " + message);
        };
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) fail("expected `char<TAB>base`");
        auto key = uni::decode_utf8(line.substr(0, tab));
        auto value = uni::decode_utf8(line.substr(tab + 1));
        if (!key || !value) fail("invalid UTF-8");
        if (key->size() != 1) fail("key must be a single character");
        if (value->size() != 1 || !uni::is_ascii_lower(value->front()))
            fail("base must be a single letter a-z");
        table.entries_[key->front()] = value->front();
    }
    return table;
}

FallbackTable FallbackTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

const FallbackTable& FallbackTable::shipped() {
    static const FallbackTable table = parse(kFallbackTableTsv, "base_fallback.tsv");
    return table;
}

namespace {
std::optional<FallbackTable>& fallback_override() {
    static std::optional<FallbackTable> table;
    return table;
}
} // namespace

const FallbackTable& default_fallback_table() {
    const auto& override_table = fallback_override();
    return override_table ? *override_table : FallbackTable::shipped();
}

void override_default_fallback_table(FallbackTable table) {
    fallback_override() = std::move(table);
}

std::optional<char32_t> FallbackTable::lookup(char32_t cp) const {
    if (auto it = entries_.find(cp); it != entries_.end()) return it->second;
    char32_t folded = uni::to_lower(cp);
    if (folded != cp)
        if (auto it = entries_.find(folded); it != entries_.end()) return it->second;
    return std::nullopt;
}

std::optional<BaseKeyAttribution> canonical_base(char32_t cp) {
    std::u32string expanded = uni::nfd_of(cp);
    char32_t folded = uni::to_lower(expanded.front());
    if (!uni::is_ascii_lower(folded)) return std::nullopt;
    BaseKeyAttribution attribution;
    attribution.character = cp;
    attribution.base = folded;
    attribution.provenance = BaseProvenance::canonical_decomposition;
    attribution.marks.assign(expanded.begin() + 1, expanded.end());
    return attribution;
}

std::optional<char32_t> fallback_base(char32_t cp, const FallbackTable& table) {
    return table.lookup(cp);
}

std::optional<BaseKeyAttribution> base_key_for(char32_t cp, const FallbackTable& table) {
    if (auto canonical = canonical_base(cp)) return canonical;
    std::u32string expanded = uni::nfd_of(cp);
    if (auto base = table.lookup(expanded.front())) {
        BaseKeyAttribution attribution;
        attribution.character = cp;
        attribution.base = *base;
        attribution.provenance = BaseProvenance::fallback_table;
        attribution.marks.assign(expanded.begin() + 1, expanded.end());
        return attribution;
    }
    return std::nullopt;
}

namespace {

constexpr std::array<UnicodeBlock, 3> kDefaultBlocks = {{
    {0x0080, 0x00FF, "Latin-1 Supplement"},
    {0x0100, 0x017F, "Latin Extended-A"},
    {0x0180, 0x024F, "Latin Extended-B"},
}};

} // namespace

std::span<const UnicodeBlock> default_census_blocks() {
    return kDefaultBlocks;
}

CensusResult decomposition_census(std::span<const UnicodeBlock> blocks, const FallbackTable& table) {
    CensusResult result;
    for (const UnicodeBlock& block : blocks) {
        for (char32_t cp = block.first; cp <= block.last; ++cp) {
            if (!uni::is_letter(cp)) continue;
            ++result.total_letters;
            if (canonical_base(cp)) {
                ++result.decomposable;
            } else if (base_key_for(cp, table)) {
                ++result.fallback;
            } else {
                result.uncovered.push_back(cp);
            }
        }
    }
    return result;
}

} // namespace kbgen
