#include "kbgen/android_emit.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace kbgen {

namespace {

constexpr std::string_view kStandardVariants[] = {"qwerty", "qwertz", "azerty", "dvorak", "colemak"};

std::string hex4(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
    return buf;
}

// Attribute-value escaping: XML specials plus numeric character references
// for anything outside printable ASCII, matching the softkey file style.
std::string escape_attr(std::u32string_view text) {
    std::string out;
    for (char32_t cp : text) {
        switch (cp) {
        case U'&': out += "&amp;"; break;
        case U'<': out += "&lt;"; break;
        case U'>': out += "&gt;"; break;
        case U'"': out += "&quot;"; break;
        default:
            if (cp >= 0x20 && cp < 0x7F)
                out += static_cast<char>(cp);
            else
                out += "&#x" + hex4(cp) + ";";
        }
    }
    return out;
}

std::string escape_attr_char(char32_t cp) { return escape_attr(std::u32string_view(&cp, 1)); }

// Long-press lists are comma-joined; a literal comma entry is emitted as an
// NCR so the splitter cannot misread it.
std::string join_long_press(const std::vector<char32_t>& entries) {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        if (entries[i] == U',')
            out += "&#x002C;";
        else
            out += escape_attr_char(entries[i]);
    }
    return out;
}

std::string sanitize_name_tail(std::string_view name) {
    std::string out;
    bool last_sep = false;
    for (char c : name) {
        if (c >= 'A' && c <= 'Z') {
            out += static_cast<char>(c - 'A' + 'a');
            last_sep = false;
        } else if (c >= '0' && c <= '9') {
            out += c;
            last_sep = false;
        } else if (!out.empty() && !last_sep) {
            out += '_';
            last_sep = true;
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

// Tail of a Unicode name with the "LATIN ... LETTER" prefix and WITH
// connectors removed: "LATIN SMALL LETTER A WITH RING ABOVE" -> a_ring_above.
std::string latin_name_tail(char32_t cp) {
    std::string name = uni::char_name(cp);
    if (name.empty())
        throw data_error("no Unicode name for U+" + hex4(cp));
    for (std::string_view prefix :
         {"LATIN SMALL LETTER ", "LATIN CAPITAL LETTER ", "LATIN LETTER "})
        if (name.starts_with(prefix)) {
            name = name.substr(prefix.size());
            break;
        }
    std::string filtered;
    std::istringstream words(name);
    std::string word;
    while (words >> word) {
        if (word == "WITH") continue;
        if (!filtered.empty()) filtered += ' ';
        filtered += word;
    }
    return sanitize_name_tail(filtered);
}

// Key id for the character as it appears in a view (the shift view holds
// uppercase images, so case determines the id form).
std::string char_key_id(char32_t cp) {
    if (cp >= U'a' && cp <= U'z') return std::string("latin_") + static_cast<char>(cp);
    if (cp >= U'A' && cp <= U'Z') return std::string("latin_") + static_cast<char>(cp);
    if (uni::is_letter(cp) && uni::is_latin_script(cp)) {
        std::string tail = latin_name_tail(cp);
        char32_t lowered = uni::to_lower(cp);
        bool uppercase_variant = lowered != cp;
        return "latin_" + tail + (uppercase_variant ? "_upper" : "");
    }
    // Non-letter keys (period, comma, digits, ...) use the plain name.
    std::string name = uni::char_name(cp);
    if (name.empty())
        throw data_error("no Unicode name for U+" + hex4(cp));
    return sanitize_name_tail(name);
}

struct KeyRef {
    std::size_t row = 0;
    std::size_t col = 0;
    const KeySlot* slot = nullptr;
};

std::vector<KeyRef> character_keys(const LayoutView& view) {
    std::vector<KeyRef> keys;
    for (std::size_t r = 0; r < view.rows.size(); ++r)
        for (std::size_t c = 0; c < view.rows[r].size(); ++c) {
            const KeySlot& slot = view.rows[r][c];
            if (slot.kind == KeySlot::Kind::character ||
                slot.kind == KeySlot::Kind::punc_placeholder)
                keys.push_back({r, c, &slot});
        }
    return keys;
}

void require_valid(const Layout& layout) {
    validate_layout(layout);
    if (layout.language_tag.empty())
        throw data_error("layout has no language tag; set one via config or --language");
}

std::string pos_id(std::size_t row, std::size_t col) {
    return "key_pos_" + std::to_string(row) + "_" + std::to_string(col);
}

} // namespace

std::string key_id_for(char32_t character, bool shifted) {
    return char_key_id(shifted ? uni::to_upper(character) : character);
}

std::string grid_shape_name(const Layout& layout) {
    std::string name = "grid";
    for (const auto& row : layout.default_view.rows) name += "_" + std::to_string(row.size());
    return name;
}

std::string emit_ime_xml(const Layout& layout, const SynthesisConfig& config) {
    require_valid(layout);
    (void)config;
    const std::string& tag = layout.language_tag;
    std::string base = layout.base_layout_name.empty() ? "qwerty" : layout.base_layout_name;

    std::string out = "<framework>\n";
    out += "  <ime string_id=\"ime_" + tag + "\" language=\"" + tag +
           "\" ascii_capable=\"true\" auto_capital=\"true\">\n";
    auto group = [&](std::string_view variant, bool labeled) {
        out += "    <keyboard_group variant=\"" + std::string(variant) + "\"";
        if (labeled) out += " variant_label=\"@string/variant_" + tag + "\"";
        out += ">\n";
        out += "      <keyboard type=\"prime\" def=\"@xml/keyboard_fragment_" + tag + "\">\n";
        out += "        <merge def=\"@xml/keyboard_" + std::string(variant) + "\"/>\n";
        out += "      </keyboard>\n";
        out += "    </keyboard_group>\n";
    };
    group(base, true);
    for (std::string_view variant : kStandardVariants)
        if (variant != base) group(variant, false);
    out += "  </ime>\n";
    out += "</framework>\n";
    return out;
}

std::string emit_keyboard_xml(const Layout& layout, const SynthesisConfig& config) {
    require_valid(layout);
    (void)config;
    const std::string& tag = layout.language_tag;
    std::string out = "<framework>\n";
    out += "  <include href=\"@xml/keyboard_base\"/>\n";
    out += "  <keyboard>\n";
    out += "    <view type=\"body\" layout=\"@layout/" + grid_shape_name(layout) + "\">\n";
    out += "      <include href=\"@xml/keymapping_" + tag + "\"/>\n";
    out += "      <softkeys href=\"@xml/softkeys_" + tag + "\"/>\n";
    out += "    </view>\n";
    out += "  </keyboard>\n";
    out += "</framework>\n";
    return out;
}

std::string emit_layout_grid_xml(const Layout& layout) {
    validate_layout(layout);
    std::string out =
        "<LinearLayout xmlns:android=\"http://schemas.android.com/apk/res/android\" "
        "style=\"@style/Input.QwertyNumbers\">\n";
    for (std::size_t r = 0; r < layout.default_view.rows.size(); ++r) {
        const auto& row = layout.default_view.rows[r];
        out += "  <LinearLayout style=\"@style/KeyboardRow\">\n";
        // integer weights summing to 1000 per row
        std::size_t n = row.size();
        std::size_t base_weight = 1000 / n;
        std::size_t remainder = 1000 % n;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t weight = base_weight + (c < remainder ? 1 : 0);
            out += "    <SoftKeyView android:id=\"@id/" + pos_id(r, c) +
                   "\" style=\"@style/SoftKey\" android:layout_weight=\"" +
                   std::to_string(weight) + "\"/>\n";
        }
        out += "  </LinearLayout>\n";
    }
    out += "</LinearLayout>\n";
    return out;
}

std::string emit_keymapping_xml(const Layout& layout) {
    require_valid(layout);
    auto keys = character_keys(layout.default_view);

    std::string out = "<framework>\n";
    out += "  <key_mapping>\n";
    for (const KeyRef& key : keys)
        out += "    <mapping view_id=\"@id/" + pos_id(key.row, key.col) + "\" key_id=\"@id/" +
               char_key_id(key.slot->ch) + "\"/>\n";
    out += "  </key_mapping>\n";
    out += "  <key_mapping state=\"SHIFT\">\n";
    for (const KeyRef& key : keys) {
        const KeySlot& shifted = layout.shift_view.rows[key.row][key.col];
        out += "    <mapping view_id=\"@id/" + pos_id(key.row, key.col) + "\" key_id=\"@id/" +
               char_key_id(shifted.ch) + "\"/>\n";
    }
    out += "  </key_mapping>\n";
    out += "</framework>\n";
    return out;
}

std::string emit_softkeys_xml(const Layout& layout) {
    require_valid(layout);
    std::string out = "<framework>\n";
    out += "  <softkeys>\n";
    out += "    <softkey_list splitter=\",\">\n";
    std::set<std::string> emitted;
    auto softkey = [&](const KeySlot& slot) {
        std::string id = char_key_id(slot.ch);
        if (!emitted.insert(id).second) return;
        out += "      <softkey id=\"@id/" + id + "\" press=\"" + escape_attr_char(slot.ch) + "\"";
        if (!slot.long_press.empty())
            out += " long_press=\"" + join_long_press(slot.long_press) + "\"";
        out += "/>\n";
    };
    for (const KeyRef& key : character_keys(layout.default_view)) {
        softkey(*key.slot);
        softkey(layout.shift_view.rows[key.row][key.col]);
    }
    out += "    </softkey_list>\n";
    out += "  </softkeys>\n";
    out += "</framework>\n";
    return out;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

void write_file_checked(const std::filesystem::path& path, const std::string& content, bool force) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(path, ec)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream existing;
        existing << in.rdbuf();
        if (existing.str() == content) return; // identical bytes, nothing to do
        if (!force)
            throw io_error(path.string() + " exists with different content (use --force to overwrite)");
    }
    std::ofstream outstream(path, std::ios::binary | std::ios::trunc);
    if (!outstream) throw io_error("cannot write " + path.string());
    outstream << content;
    if (!outstream) throw io_error("write failed for " + path.string());
}

} // namespace

EmitManifest emit_package(const Layout& layout, const SynthesisConfig& config,
                          const std::filesystem::path& outdir, bool force) {
    namespace fs = std::filesystem;
    require_valid(layout);
    const std::string& tag = layout.language_tag;

    fs::path xml_dir = outdir / tag / "xml";
    std::error_code ec;
    fs::create_directories(xml_dir, ec);
    if (ec) throw io_error("cannot create " + xml_dir.string() + ": " + ec.message());

    EmitManifest manifest;
    manifest.language_tag = tag;

    auto add_file = [&](std::string kind, const fs::path& relative, const std::string& content,
                        bool shared) {
        if (!shared) write_file_checked(outdir / relative, content, force);
        manifest.files.push_back(ManifestFile{std::move(kind), relative.generic_string(),
                                              content.size(), fnv1a_hex(content), shared});
    };

    std::string shape = grid_shape_name(layout);
    std::string grid_content = emit_layout_grid_xml(layout);

    // A same-shape grid emitted for another language is reused rather than
    // duplicated; resource references are by shape name anyway.
    fs::path grid_relative = fs::path(tag) / "xml" / ("layout_" + shape + ".xml");
    bool grid_shared = false;
    if (!fs::exists(outdir / grid_relative)) {
        std::vector<fs::path> candidates;
        if (fs::exists(outdir))
            for (const auto& entry : fs::directory_iterator(outdir)) {
                if (!entry.is_directory()) continue;
                fs::path candidate = entry.path() / "xml" / ("layout_" + shape + ".xml");
                if (fs::exists(candidate)) candidates.push_back(candidate);
            }
        std::sort(candidates.begin(), candidates.end());
        if (!candidates.empty()) {
            grid_relative = fs::relative(candidates.front(), outdir);
            grid_shared = true;
        }
    }

    add_file("ime", fs::path(tag) / "xml" / ("ime_" + tag + ".xml"),
             emit_ime_xml(layout, config), false);
    add_file("keyboard", fs::path(tag) / "xml" / ("keyboard_fragment_" + tag + ".xml"),
             emit_keyboard_xml(layout, config), false);
    add_file("layout_grid", grid_relative, grid_content, grid_shared);
    add_file("keymapping", fs::path(tag) / "xml" / ("keymapping_" + tag + ".xml"),
             emit_keymapping_xml(layout), false);
    add_file("softkeys", fs::path(tag) / "xml" / ("softkeys_" + tag + ".xml"),
             emit_softkeys_xml(layout), false);

    manifest.registry_entries = {
        "ime_" + tag,
        "keyboard_fragment_" + tag,
        "keymapping_" + tag,
        "softkeys_" + tag,
        shape,
    };
    return manifest;
}

std::string manifest_to_tsv(const EmitManifest& manifest) {
    std::string out;
    for (const auto& file : manifest.files)
        out += manifest.language_tag + "\tfile\t" + file.kind + "\t" + file.relative_path + "\t" +
               std::to_string(file.byte_length) + "\t" + file.digest + "\t" +
               (file.shared ? "shared" : "new") + "\n";
    for (const auto& entry : manifest.registry_entries)
        out += manifest.language_tag + "\tregistry\t" + entry + "\n";
    return out;
}

void append_manifest_tsv(const std::filesystem::path& outdir, const EmitManifest& manifest) {
    std::ofstream out(outdir / "manifest.tsv", std::ios::binary | std::ios::app);
    if (!out) throw io_error("cannot write manifest.tsv under " + outdir.string());
    out << manifest_to_tsv(manifest);
    if (!out) throw io_error("manifest write failed under " + outdir.string());
}

} // namespace kbgen
