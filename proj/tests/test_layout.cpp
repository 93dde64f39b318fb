#include "kbgen/layout.hpp"
#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include <doctest.h>

#include <random>

using namespace kbgen;

namespace {

// The worked CSV example: four rows, ten columns, digits as top-row
// long-presses and the period key holding the punctuation placeholder.
constexpr std::string_view kExampleCsv =
    "Visible layout,,,,,,,,,,\n"
    "press1,1,2,3,4,5,6,7,8,9,0\n"
    "row1,q,w,e,r,t,y,u,i,o,p\n"
    "press2,,,,,,,,,,\n"
    "row2,a,s,d,f,g,h,j,k,l,ñ\n"
    "press3,Shift,,,,,,,,Del,\n"
    "row3,,z,x,c,v,b,n,m,,\n"
    "press4,,,,Space,,,,\"[punc]\",Enter,\n"
    "row4,,\",\",,,,,,.,,\n";

} // namespace

TEST_CASE("parsing the worked example yields the expected grid") {
    Layout layout = parse_layout_csv(kExampleCsv);
    REQUIRE(layout.default_view.row_count() == 4);
    REQUIRE(layout.default_view.column_count() == 10);

    const KeySlot& q = layout.default_view.rows[0][0];
    CHECK(q.kind == KeySlot::Kind::character);
    CHECK(q.ch == U'q');
    CHECK(q.long_press == std::vector<char32_t>{U'1'});

    const KeySlot& n_tilde = layout.default_view.rows[1][9];
    CHECK(n_tilde.ch == U'ñ');

    const KeySlot& shift = layout.default_view.rows[2][0];
    CHECK(shift.kind == KeySlot::Kind::special);
    CHECK(shift.special == SpecialKey::shift);
    CHECK(layout.default_view.rows[2][8].special == SpecialKey::del);

    const KeySlot& period = layout.default_view.rows[3][7];
    CHECK(period.kind == KeySlot::Kind::punc_placeholder);
    CHECK(period.ch == U'.');

    const KeySlot& comma = layout.default_view.rows[3][1];
    CHECK(comma.kind == KeySlot::Kind::character);
    CHECK(comma.ch == U',');
    CHECK(layout.default_view.rows[3][3].special == SpecialKey::space);
    CHECK(layout.default_view.rows[3][8].special == SpecialKey::enter);

    // shift view is derived
    CHECK(layout.shift_view.rows[0][0].ch == U'Q');
    CHECK(layout.shift_view.rows[1][9].ch == U'Ñ');
    CHECK(layout.shift_view.rows[2][0].kind == KeySlot::Kind::special);
}

TEST_CASE("serialize after parse reproduces the canonical bytes") {
    Layout layout = parse_layout_csv(kExampleCsv);
    CHECK(serialize_layout_csv(layout) == kExampleCsv);
}

TEST_CASE("quoted cells unescape and re-escape") {
    Layout layout = parse_layout_csv(kExampleCsv);
    CHECK(layout.default_view.rows[3][1].ch == U',');

    // a quote character key survives the round trip
    std::string csv =
        "Visible layout,,\n"
        "press1,,\n"
        "row1,\"\"\"\",a\n";
    Layout quoted = parse_layout_csv(csv);
    CHECK(quoted.default_view.rows[0][0].ch == U'"');
    CHECK(parse_layout_csv(serialize_layout_csv(quoted)) == quoted);
}

TEST_CASE("explicit shift blocks parse and serialize only when not derivable") {
    std::string csv =
        "Visible layout,,\n"
        "press1,é è,\n"
        "row1,e,b\n"
        "Shift layout,,\n"
        "press1,É È,\n"
        "row1,E,B\n";
    Layout layout = parse_layout_csv(csv);
    CHECK(layout.shift_view.rows[0][0].ch == U'E');
    // that shift view equals the derived one, so canonical form drops it
    std::string canonical = serialize_layout_csv(layout);
    CHECK(canonical.find("Shift layout") == std::string::npos);
    CHECK(parse_layout_csv(canonical) == layout);

    // a shift view with its own long-press order is preserved
    std::string custom =
        "Visible layout,,\n"
        "press1,é è,\n"
        "row1,e,b\n"
        "Shift layout,,\n"
        "press1,È É,\n"
        "row1,E,B\n";
    Layout custom_layout = parse_layout_csv(custom);
    CHECK(custom_layout.shift_view.rows[0][0].long_press ==
          std::vector<char32_t>{U'È', U'É'});
    std::string serialized = serialize_layout_csv(custom_layout);
    CHECK(serialized.find("Shift layout") != std::string::npos);
    CHECK(parse_layout_csv(serialized) == custom_layout);
}

TEST_CASE("parse errors name the offending line") {
    auto message_of = [](std::string_view csv) {
        try {
            parse_layout_csv(csv);
            return std::string("no error");
        } catch (const Error& e) {
            return std::string(e.what());
        }
    };
    SUBCASE("width mismatch") {
        CHECK(message_of("Visible layout,,\npress1,,\nrow1,a,b,c\n").find("line 3") !=
              std::string::npos);
    }
    SUBCASE("press without row") {
        CHECK(message_of("Visible layout,,\npress1,,\n").find("row1") != std::string::npos);
    }
    SUBCASE("unknown keyword") {
        CHECK(message_of("Visible layout,,\npress1,Bksp,\nrow1,,a\n").find("Bksp") !=
              std::string::npos);
    }
    SUBCASE("long-press on empty slot") {
        CHECK(message_of("Visible layout,,\npress1,é,\nrow1,,a\n").find("empty slot") !=
              std::string::npos);
    }
    SUBCASE("misplaced special keyword casing") {
        CHECK(message_of("Visible layout,,\npress1,SHIFT,\nrow1,,a\n").find("SHIFT") !=
              std::string::npos);
    }
    SUBCASE("special key with a character") {
        CHECK(message_of("Visible layout,,\npress1,Shift,\nrow1,a,b\n").find("cannot also hold") !=
              std::string::npos);
    }
    SUBCASE("unterminated quote") {
        CHECK(message_of("Visible layout,,\npress1,,\nrow1,\"a,b\n").find("unterminated") !=
              std::string::npos);
    }
}

TEST_CASE("builtin layouts") {
    SUBCASE("qwerty has 26 letters, no long presses, period and comma") {
        Layout qwerty = builtin_base_layout("qwerty");
        auto visible = visible_characters(qwerty);
        for (char32_t cp = U'a'; cp <= U'z'; ++cp) CHECK(visible.contains(cp));
        CHECK(visible.contains(U'.'));
        CHECK(visible.contains(U','));
        CHECK(visible.size() == 28);
        for (const auto& row : qwerty.default_view.rows)
            for (const auto& slot : row) CHECK(slot.long_press.empty());
    }
    SUBCASE("qwerty_n_tilde ends the home row with n-tilde") {
        Layout layout = builtin_base_layout("qwerty_n_tilde");
        std::u32string home;
        for (const auto& slot : layout.default_view.rows[1])
            if (slot.kind == KeySlot::Kind::character) home.push_back(slot.ch);
        CHECK(home == U"asdfghjklñ");
        CHECK(layout.default_view.rows[0][0].long_press == std::vector<char32_t>{U'1'});
    }
    SUBCASE("all builtins carry 26 letters and a punctuation placeholder") {
        for (std::string_view name : builtin_layout_names()) {
            Layout layout = builtin_base_layout(name);
            CHECK(layout.base_layout_name == name);
            int letters = 0, placeholders = 0;
            for (const auto& row : layout.default_view.rows)
                for (const auto& slot : row) {
                    if (slot.kind == KeySlot::Kind::character && uni::is_letter(slot.ch)) ++letters;
                    if (slot.kind == KeySlot::Kind::punc_placeholder) ++placeholders;
                }
            CHECK(letters == (name == "qwerty_n_tilde" ? 27 : 26));
            CHECK(placeholders == 1);
        }
    }
    SUBCASE("unknown names list the valid ones") {
        try {
            builtin_base_layout("qzerty");
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::usage);
            CHECK(std::string(e.what()).find("azerty") != std::string::npos);
        }
    }
}

TEST_CASE("visible_characters case-folds and includes the placeholder key") {
    Layout layout = builtin_base_layout("qwerty_n_tilde");
    auto visible = visible_characters(layout);
    CHECK(visible.contains(U'ñ'));
    CHECK(visible.contains(U'.'));
    auto qwerty_visible = visible_characters(builtin_base_layout("qwerty"));
    CHECK(visible.size() == qwerty_visible.size() + 1);
}

TEST_CASE("derive_shift_view uppercases characters, keeps caseless and specials") {
    LayoutView view;
    view.rows = {{KeySlot::character_slot(U'ñ', {U'n'}), KeySlot::character_slot(U'ß'),
                  KeySlot::special_slot(SpecialKey::shift)}};
    LayoutView shifted = derive_shift_view(view);
    CHECK(shifted.rows[0][0].ch == U'Ñ');
    CHECK(shifted.rows[0][0].long_press == std::vector<char32_t>{U'N'});
    CHECK(shifted.rows[0][1].ch == U'ß'); // sharp s stays one scalar
    CHECK(shifted.rows[0][2] == view.rows[0][2]);
    // idempotent on its own output here
    CHECK(derive_shift_view(shifted) == shifted);
}

TEST_CASE("random layouts round-trip through the codec") {
    std::mt19937 rng(424242);
    std::u32string letter_pool = U"abcdefghijklmnopqrstuvwxyzñéøßàçæœūą";
    std::u32string punct_pool = U".,;:!?\"'¿¡-";

    for (int round = 0; round < 60; ++round) {
        std::uniform_int_distribution<std::size_t> row_dist(1, 5), col_dist(2, 12);
        std::size_t rows = row_dist(rng), cols = col_dist(rng);
        std::vector<char32_t> available(letter_pool.begin(), letter_pool.end());
        std::shuffle(available.begin(), available.end(), rng);
        std::size_t cursor = 0;

        Layout layout;
        bool used_punc = false;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<KeySlot> row;
            for (std::size_t c = 0; c < cols; ++c) {
                int kind = std::uniform_int_distribution<int>(0, 9)(rng);
                if (kind == 0) {
                    row.push_back(KeySlot::empty_slot());
                } else if (kind == 1) {
                    row.push_back(KeySlot::special_slot(static_cast<SpecialKey>(
                        std::uniform_int_distribution<int>(0, 3)(rng))));
                } else if (kind == 2 && !used_punc) {
                    used_punc = true;
                    row.push_back(KeySlot::punc_slot(U'.'));
                } else if (cursor < available.size()) {
                    std::vector<char32_t> lp;
                    int presses = std::uniform_int_distribution<int>(0, 3)(rng);
                    for (int p = 0; p < presses; ++p) {
                        char32_t candidate =
                            punct_pool[std::uniform_int_distribution<std::size_t>(
                                0, punct_pool.size() - 1)(rng)];
                        if (std::find(lp.begin(), lp.end(), candidate) == lp.end())
                            lp.push_back(candidate);
                    }
                    row.push_back(KeySlot::character_slot(available[cursor++], std::move(lp)));
                } else {
                    row.push_back(KeySlot::empty_slot());
                }
            }
            layout.default_view.rows.push_back(std::move(row));
        }
        layout.shift_view = derive_shift_view(layout.default_view);
        validate_layout(layout);

        std::string serialized = serialize_layout_csv(layout);
        Layout reparsed = parse_layout_csv(serialized);
        CHECK(reparsed == layout);
        CHECK(serialize_layout_csv(reparsed) == serialized);
    }
}
