#include "kbgen/preview.hpp"

#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <string>

namespace kbgen {

namespace {

std::string escape_text(std::u32string_view text) {
    std::string out;
    for (char32_t cp : text) {
        switch (cp) {
        case U'&': out += "&amp;"; break;
        case U'<': out += "&lt;"; break;
        case U'>': out += "&gt;"; break;
        default: out += uni::encode_utf8(cp);
        }
    }
    return out;
}

std::string escape_char(char32_t cp) { return escape_text(std::u32string_view(&cp, 1)); }

} // namespace

std::string render_svg(const Layout& layout, ViewChoice view, const RenderStyle& style) {
    if (style.key_width <= 0 || style.key_height <= 0 || style.font_size <= 0)
        throw usage_error("render style dimensions must be positive");

    const LayoutView& grid =
        view == ViewChoice::default_view ? layout.default_view : layout.shift_view;
    const int columns = static_cast<int>(grid.column_count());
    const int rows = static_cast<int>(grid.row_count());
    const int pitch_x = style.key_width + style.gap;
    const int pitch_y = style.key_height + style.gap;
    const int width = style.gap + columns * pitch_x;
    const int height = style.gap + rows * pitch_y;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"#e8eaed\"/>\n";

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < columns; ++c) {
            const KeySlot& slot = grid.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            const int x = style.gap + c * pitch_x;
            const int y = style.gap + r * pitch_y;
            const bool blank = slot.kind == KeySlot::Kind::empty;
            svg += "  <rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(style.key_width) + "\" height=\"" +
                   std::to_string(style.key_height) + "\" rx=\"" +
                   std::to_string(style.corner_radius) + "\" fill=\"" +
                   (blank ? "#f1f3f4" : "#ffffff") + "\" stroke=\"#5f6368\" stroke-width=\"1\"/>\n";
            if (blank) continue;

            const int cx = x + style.key_width / 2;
            const int cy = y + style.key_height / 2 + style.font_size * 7 / 20;
            if (slot.kind == KeySlot::Kind::special) {
                const int small = style.font_size * 11 / 20;
                svg += "  <text x=\"" + std::to_string(cx) + "\" y=\"" +
                       std::to_string(y + style.key_height / 2 + small * 7 / 20) +
                       "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(small) +
                       "\" text-anchor=\"middle\" fill=\"#202124\">" +
                       std::string(special_key_name(slot.special)) + "</text>\n";
            } else {
                svg += "  <text x=\"" + std::to_string(cx) + "\" y=\"" + std::to_string(cy) +
                       "\" font-family=\"sans-serif\" font-size=\"" +
                       std::to_string(style.font_size) +
                       "\" text-anchor=\"middle\" fill=\"#202124\">" + escape_char(slot.ch) +
                       "</text>\n";
                if (!slot.long_press.empty()) {
                    const int hint_size = style.font_size / 2;
                    const int inset = style.corner_radius;
                    int hx = x + style.key_width - inset;
                    int hy = y + inset + hint_size;
                    std::string anchor = "end";
                    switch (style.hint_corner) {
                    case HintCorner::top_right: break;
                    case HintCorner::top_left:
                        hx = x + inset;
                        anchor = "start";
                        break;
                    case HintCorner::bottom_right:
                        hy = y + style.key_height - inset;
                        break;
                    case HintCorner::bottom_left:
                        hx = x + inset;
                        hy = y + style.key_height - inset;
                        anchor = "start";
                        break;
                    }
                    svg += "  <text x=\"" + std::to_string(hx) + "\" y=\"" + std::to_string(hy) +
                           "\" font-family=\"sans-serif\" font-size=\"" +
                           std::to_string(hint_size) + "\" text-anchor=\"" + anchor +
                           "\" fill=\"#80868b\">" + escape_char(slot.long_press.front()) +
                           "</text>\n";
                }
            }
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace kbgen
