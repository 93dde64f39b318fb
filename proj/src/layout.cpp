#include "kbgen/layout.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <algorithm>
#include <array>

namespace kbgen {

namespace {

constexpr std::string_view kVisibleHeader = "Visible layout";
constexpr std::string_view kShiftHeader = "Shift layout";
constexpr std::string_view kPuncToken = "[punc]";

constexpr std::array<std::string_view, 4> kSpecialNames = {"Shift", "Del", "Space", "Enter"};

} // namespace

std::string_view special_key_name(SpecialKey key) {
    return kSpecialNames[static_cast<std::size_t>(key)];
}

std::optional<SpecialKey> special_key_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kSpecialNames.size(); ++i)
        if (kSpecialNames[i] == name) return static_cast<SpecialKey>(i);
    return std::nullopt;
}

KeySlot KeySlot::character_slot(char32_t c, std::vector<char32_t> lp) {
    KeySlot slot;
    slot.kind = Kind::character;
    slot.ch = c;
    slot.long_press = std::move(lp);
    return slot;
}

KeySlot KeySlot::special_slot(SpecialKey key) {
    KeySlot slot;
    slot.kind = Kind::special;
    slot.special = key;
    return slot;
}

KeySlot KeySlot::punc_slot(char32_t visible) {
    KeySlot slot;
    slot.kind = Kind::punc_placeholder;
    slot.ch = visible;
    return slot;
}

LayoutView derive_shift_view(const LayoutView& view) {
    LayoutView shifted = view;
    for (auto& row : shifted.rows) {
        for (auto& slot : row) {
            if (slot.kind == KeySlot::Kind::character || slot.kind == KeySlot::Kind::punc_placeholder)
                slot.ch = uni::to_upper(slot.ch);
            std::vector<char32_t> lifted;
            lifted.reserve(slot.long_press.size());
            for (char32_t cp : slot.long_press) {
                char32_t up = uni::to_upper(cp);
                if (std::find(lifted.begin(), lifted.end(), up) == lifted.end())
                    lifted.push_back(up);
            }
            slot.long_press = std::move(lifted);
        }
    }
    return shifted;
}

std::set<char32_t> visible_characters(const Layout& layout) {
    std::set<char32_t> chars;
    for (const auto& row : layout.default_view.rows)
        for (const auto& slot : row)
            if (slot.kind == KeySlot::Kind::character || slot.kind == KeySlot::Kind::punc_placeholder)
                chars.insert(uni::to_lower(slot.ch));
    return chars;
}

void validate_layout(const Layout& layout) {
    auto check_rect = [](const LayoutView& view, std::string_view which) {
        if (view.rows.empty()) throw data_error(std::string(which) + " view has no rows");
        std::size_t cols = view.rows.front().size();
        if (cols == 0) throw data_error(std::string(which) + " view has empty rows");
        for (const auto& row : view.rows)
            if (row.size() != cols) throw data_error(std::string(which) + " view is not rectangular");
    };
    check_rect(layout.default_view, "default");
    check_rect(layout.shift_view, "shift");
    if (layout.default_view.row_count() != layout.shift_view.row_count() ||
        layout.default_view.column_count() != layout.shift_view.column_count())
        throw data_error("default and shift views have different grid dimensions");

    for (std::size_t r = 0; r < layout.default_view.row_count(); ++r) {
        for (std::size_t c = 0; c < layout.default_view.column_count(); ++c) {
            const KeySlot& lower = layout.default_view.rows[r][c];
            const KeySlot& upper = layout.shift_view.rows[r][c];
            if (lower.kind != upper.kind)
                throw data_error("shift slot kind mismatch at row " + std::to_string(r + 1) +
                                 ", column " + std::to_string(c + 1));
            if ((lower.kind == KeySlot::Kind::character || lower.kind == KeySlot::Kind::punc_placeholder) &&
                upper.ch != uni::to_upper(lower.ch))
                throw data_error("shift slot is not the uppercase image at row " +
                                 std::to_string(r + 1) + ", column " + std::to_string(c + 1));
            if (lower.kind == KeySlot::Kind::special && lower.special != upper.special)
                throw data_error("shift special key mismatch at row " + std::to_string(r + 1));
        }
    }
    for (const LayoutView* view : {&layout.default_view, &layout.shift_view}) {
        for (const auto& row : view->rows) {
            for (const auto& slot : row) {
                std::set<char32_t> seen;
                for (char32_t cp : slot.long_press)
                    if (!seen.insert(cp).second)
                        throw data_error("duplicate long-press entry " + uni::encode_utf8(cp));
                if (slot.kind == KeySlot::Kind::empty && !slot.long_press.empty())
                    throw data_error("empty slot carries long-press entries");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// CSV codec
// ---------------------------------------------------------------------------

namespace {

struct CsvLine {
    std::size_t number = 0; // 1-based
    std::vector<std::string> fields;
};

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
    throw data_error("layout csv line " + std::to_string(line) + ": " + message);
}

std::vector<CsvLine> split_csv(std::string_view text) {
    std::vector<CsvLine> lines;
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        CsvLine line;
        line.number = line_no;
        std::string field;
        bool quoted = false;
        std::size_t i = 0;
        while (i <= raw.size()) {
            if (i == raw.size()) {
                if (quoted) parse_fail(line_no, "unterminated quoted field");
                line.fields.push_back(std::move(field));
                break;
            }
            char c = raw[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < raw.size() && raw[i + 1] == '"') {
                        field += '"';
                        i += 2;
                    } else {
                        quoted = false;
                        ++i;
                        if (i < raw.size() && raw[i] != ',')
                            parse_fail(line_no, "text after closing quote");
                    }
                } else {
                    field += c;
                    ++i;
                }
            } else if (c == '"') {
                if (!field.empty()) parse_fail(line_no, "quote inside unquoted field");
                quoted = true;
                ++i;
            } else if (c == ',') {
                line.fields.push_back(std::move(field));
                field.clear();
                ++i;
            } else {
                field += c;
                ++i;
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::u32string decode_cell(const std::string& cell, std::size_t line_no) {
    auto decoded = uni::decode_utf8(cell);
    if (!decoded) parse_fail(line_no, "cell is not valid UTF-8");
    return *decoded;
}

bool is_blank_line(const CsvLine& line) {
    return std::all_of(line.fields.begin(), line.fields.end(),
                       [](const std::string& f) { return f.empty(); });
}

// Builds one view from alternating press{i}/row{i} records.
LayoutView parse_view_block(std::span<const CsvLine> lines, std::size_t& index,
                            std::size_t expected_columns) {
    LayoutView view;
    std::size_t row_index = 0;
    while (index < lines.size()) {
        const CsvLine& press_line = lines[index];
        if (press_line.fields.empty() || !press_line.fields.front().starts_with("press")) break;
        ++row_index;
        std::string expected_press = "press" + std::to_string(row_index);
        if (press_line.fields.front() != expected_press)
            parse_fail(press_line.number, "expected `" + expected_press + "`, got `" +
                                              press_line.fields.front() + "`");
        if (index + 1 >= lines.size() || lines[index + 1].fields.empty() ||
            lines[index + 1].fields.front() != "row" + std::to_string(row_index))
            parse_fail(press_line.number, "press line without matching `row" +
                                              std::to_string(row_index) + "` line");
        const CsvLine& row_line = lines[index + 1];
        if (press_line.fields.size() != expected_columns + 1 ||
            row_line.fields.size() != expected_columns + 1)
            parse_fail(row_line.number, "mismatched row width (expected " +
                                            std::to_string(expected_columns) + " cells)");

        std::vector<KeySlot> slots;
        slots.reserve(expected_columns);
        for (std::size_t col = 0; col < expected_columns; ++col) {
            const std::string& press_cell = press_line.fields[col + 1];
            const std::string& row_cell = row_line.fields[col + 1];

            KeySlot slot;
            if (auto special = special_key_from_name(press_cell)) {
                if (!row_cell.empty())
                    parse_fail(row_line.number, "special key `" + press_cell +
                                                    "` cannot also hold a character");
                slot = KeySlot::special_slot(*special);
            } else if (press_cell == kPuncToken) {
                std::u32string visible = decode_cell(row_cell, row_line.number);
                if (visible.size() != 1)
                    parse_fail(row_line.number, "`[punc]` needs a single visible character");
                slot = KeySlot::punc_slot(visible.front());
            } else {
                std::u32string row_scalars = decode_cell(row_cell, row_line.number);
                if (row_scalars.size() > 1)
                    parse_fail(row_line.number, "key must hold a single character");

                std::vector<char32_t> long_press;
                if (!press_cell.empty()) {
                    std::u32string press_scalars = decode_cell(press_cell, press_line.number);
                    std::u32string token;
                    auto flush = [&] {
                        if (token.empty()) return;
                        if (token.size() != 1) {
                            std::string bad = uni::encode_utf8(token);
                            if (special_key_from_name(bad) || bad == kPuncToken)
                                parse_fail(press_line.number, "misplaced keyword `" + bad + "`");
                            parse_fail(press_line.number,
                                       "unknown keyword or multi-character long-press `" + bad + "`");
                        }
                        if (std::find(long_press.begin(), long_press.end(), token.front()) !=
                            long_press.end())
                            parse_fail(press_line.number, "duplicate long-press entry `" +
                                                              uni::encode_utf8(token) + "`");
                        long_press.push_back(token.front());
                        token.clear();
                    };
                    for (char32_t cp : press_scalars) {
                        if (cp == U' ')
                            flush();
                        else
                            token.push_back(cp);
                    }
                    flush();
                }

                if (row_scalars.empty()) {
                    if (!long_press.empty())
                        parse_fail(press_line.number, "long-press attached to an empty slot");
                    slot = KeySlot::empty_slot();
                } else {
                    slot = KeySlot::character_slot(row_scalars.front(), std::move(long_press));
                }
            }
            slots.push_back(std::move(slot));
        }
        view.rows.push_back(std::move(slots));
        index += 2;
    }
    if (view.rows.empty() && index < lines.size())
        parse_fail(lines[index].number, "expected a `press1` line");
    return view;
}

bool needs_quoting(std::string_view cell) {
    return cell.find(',') != std::string_view::npos ||
           cell.find('"') != std::string_view::npos || cell == kPuncToken ||
           (!cell.empty() && (cell.front() == ' ' || cell.back() == ' '));
}

void append_cell(std::string& out, std::string_view cell) {
    if (!needs_quoting(cell)) {
        out += cell;
        return;
    }
    out += '"';
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void serialize_view(std::string& out, const LayoutView& view, std::string_view header) {
    std::size_t columns = view.column_count();
    out += header;
    out.append(columns, ',');
    out += '\n';
    for (std::size_t r = 0; r < view.rows.size(); ++r) {
        std::string press = "press" + std::to_string(r + 1);
        std::string row = "row" + std::to_string(r + 1);
        for (const KeySlot& slot : view.rows[r]) {
            press += ',';
            row += ',';
            switch (slot.kind) {
            case KeySlot::Kind::empty:
                break;
            case KeySlot::Kind::special:
                append_cell(press, special_key_name(slot.special));
                break;
            case KeySlot::Kind::punc_placeholder:
                append_cell(press, kPuncToken);
                append_cell(row, uni::encode_utf8(slot.ch));
                break;
            case KeySlot::Kind::character: {
                std::string joined;
                for (std::size_t i = 0; i < slot.long_press.size(); ++i) {
                    if (i) joined += ' ';
                    joined += uni::encode_utf8(slot.long_press[i]);
                }
                append_cell(press, joined);
                append_cell(row, uni::encode_utf8(slot.ch));
                break;
            }
            }
        }
        out += press;
        out += '\n';
        out += row;
        out += '\n';
    }
}

} // namespace

Layout parse_layout_csv(std::string_view text) {
    std::vector<CsvLine> all_lines = split_csv(text);
    std::vector<CsvLine> lines;
    lines.reserve(all_lines.size());
    for (auto& line : all_lines)
        if (!is_blank_line(line)) lines.push_back(std::move(line));
    if (lines.empty()) throw data_error("layout csv is empty");

    if (lines.front().fields.front() != kVisibleHeader)
        parse_fail(lines.front().number, "expected `Visible layout` header");
    std::size_t columns = lines.front().fields.size() - 1;
    if (columns == 0) parse_fail(lines.front().number, "header declares zero columns");

    std::size_t index = 1;
    Layout layout;
    layout.default_view = parse_view_block(lines, index, columns);
    if (layout.default_view.rows.empty())
        throw data_error("layout csv has no rows");

    if (index < lines.size() && lines[index].fields.front() == kShiftHeader) {
        if (lines[index].fields.size() != columns + 1)
            parse_fail(lines[index].number, "shift header width mismatch");
        ++index;
        layout.shift_view = parse_view_block(lines, index, columns);
    } else {
        layout.shift_view = derive_shift_view(layout.default_view);
    }
    if (index < lines.size())
        parse_fail(lines[index].number, "unexpected record `" + lines[index].fields.front() + "`");

    validate_layout(layout);
    return layout;
}

std::string serialize_layout_csv(const Layout& layout) {
    std::string out;
    serialize_view(out, layout.default_view, kVisibleHeader);
    if (layout.shift_view != derive_shift_view(layout.default_view))
        serialize_view(out, layout.shift_view, kShiftHeader);
    return out;
}

} // namespace kbgen
