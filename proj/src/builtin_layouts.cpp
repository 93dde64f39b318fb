#include "kbgen/layout.hpp"

#include "kbgen/error.hpp"

#include <array>
#include <utility>

namespace kbgen {

namespace {

// Base layouts are stored in the same CSV format the tool reads and writes.
// qwerty_n_tilde carries the digit long-presses on its top row; the plain
// layouts ship with no long-presses at all.

constexpr std::string_view kQwerty =
    "Visible layout,,,,,,,,,,\n"
    "press1,,,,,,,,,,\n"
    "row1,q,w,e,r,t,y,u,i,o,p\n"
    "press2,,,,,,,,,,\n"
    "row2,a,s,d,f,g,h,j,k,l,\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,z,x,c,v,b,n,m,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

constexpr std::string_view kQwertyNTilde =
    "Visible layout,,,,,,,,,,\n"
    "press1,1,2,3,4,5,6,7,8,9,0\n"
    "row1,q,w,e,r,t,y,u,i,o,p\n"
    "press2,,,,,,,,,,\n"
    "row2,a,s,d,f,g,h,j,k,l,ñ\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,z,x,c,v,b,n,m,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

constexpr std::string_view kAzerty =
    "Visible layout,,,,,,,,,,\n"
    "press1,,,,,,,,,,\n"
    "row1,a,z,e,r,t,y,u,i,o,p\n"
    "press2,,,,,,,,,,\n"
    "row2,q,s,d,f,g,h,j,k,l,m\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,w,x,c,v,b,n,,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

constexpr std::string_view kQwertz =
    "Visible layout,,,,,,,,,,\n"
    "press1,,,,,,,,,,\n"
    "row1,q,w,e,r,t,z,u,i,o,p\n"
    "press2,,,,,,,,,,\n"
    "row2,a,s,d,f,g,h,j,k,l,\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,y,x,c,v,b,n,m,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

// Letter-only Dvorak; the home and bottom rows keep their desktop order, so
// Del moves next to Enter to free the bottom row.
constexpr std::string_view kDvorak =
    "Visible layout,,,,,,,,,,\n"
    "press1,,,,,,,,,,\n"
    "row1,,,,p,y,f,g,c,r,l\n"
    "press2,,,,,,,,,,\n"
    "row2,a,o,e,u,i,d,h,t,n,s\n"
    "press3,Shift,,,,,,,,,\n"
    "row3,,q,j,k,x,b,m,w,v,z\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,Del\n"
    "row4,,\",\",,,,,,.,,\n";

constexpr std::string_view kColemak =
    "Visible layout,,,,,,,,,,\n"
    "press1,,,,,,,,,,\n"
    "row1,q,w,f,p,g,j,l,u,y,\n"
    "press2,,,,,,,,,,\n"
    "row2,a,r,s,t,d,h,n,e,i,o\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,z,x,c,v,b,k,m,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kBuiltins = {{
    {"qwerty", kQwerty},
    {"qwerty_n_tilde", kQwertyNTilde},
    {"azerty", kAzerty},
    {"qwertz", kQwertz},
    {"dvorak", kDvorak},
    {"colemak", kColemak},
}};

constexpr std::array<std::string_view, 6> kBuiltinNames = {
    "qwerty", "qwerty_n_tilde", "azerty", "qwertz", "dvorak", "colemak",
};

} // namespace

std::span<const std::string_view> builtin_layout_names() {
    return kBuiltinNames;
}

Layout builtin_base_layout(std::string_view name) {
    for (const auto& [key, csv] : kBuiltins) {
        if (key != name) continue;
        Layout layout = parse_layout_csv(csv);
        layout.name = std::string(name);
        layout.base_layout_name = std::string(name);
        return layout;
    }
    std::string message = "unknown base layout `" + std::string(name) + "`; valid names:";
    for (auto known : kBuiltinNames) {
        message += ' ';
        message += known;
    }
    throw usage_error(std::move(message));
}

} // namespace kbgen
