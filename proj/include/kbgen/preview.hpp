#pragma once

#include "kbgen/layout.hpp"

#include <string>

namespace kbgen {

enum class ViewChoice { default_view, shift_view };

enum class HintCorner { top_left, top_right, bottom_left, bottom_right };

struct RenderStyle {
    int key_width = 64;
    int key_height = 64;
    int corner_radius = 8;
    int font_size = 24;
    int gap = 6;
    HintCorner hint_corner = HintCorner::top_right;
};

// Static SVG picture of one view: a rounded rectangle per slot, the key
// character centered, the most frequent long-press as a small corner hint.
std::string render_svg(const Layout& layout, ViewChoice view, const RenderStyle& style = {});

} // namespace kbgen
