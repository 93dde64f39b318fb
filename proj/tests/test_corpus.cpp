#include "kbgen/corpus.hpp"
#include "kbgen/error.hpp"
#include "kbgen/unicode.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace kbgen;
using kbtest::TempDir;
using kbtest::write_file;

TEST_CASE("plain text loading composes decomposed input") {
    TempDir dir("corpus");
    // "Ola" + combining acute on the a
    auto path = write_file(dir.path, "ola.txt", "Ola\xCC\x81");
    CorpusDocument doc = load_plain_text(path);
    CHECK(doc.text == U"Olá");
    CHECK(doc.weight == 1);
    CHECK(doc.source_id == path.string());
}

TEST_CASE("empty file loads as empty document") {
    TempDir dir("corpus");
    auto path = write_file(dir.path, "empty.txt", "");
    CorpusDocument doc = load_plain_text(path);
    CHECK(doc.text.empty());
    CHECK(doc.weight == 1);
}

TEST_CASE("BOM is stripped") {
    TempDir dir("corpus");
    auto path = write_file(dir.path, "bom.txt", "\xEF\xBB\xBF" "abc");
    CHECK(load_plain_text(path).text == U"abc");
}

TEST_CASE("control characters are removed, newline and tab survive") {
    CorpusDocument doc = load_plain_text_bytes("a\x01s\x7F\tdf\ng", "mem");
    CHECK(doc.text == U"as\tdf\ng");
}

TEST_CASE("missing file raises an io error") {
    CHECK_THROWS_AS(load_plain_text("/nonexistent/kbgen.txt"), Error);
    try {
        load_plain_text("/nonexistent/kbgen.txt");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io);
        CHECK(std::string(e.what()).find("/nonexistent/kbgen.txt") != std::string::npos);
    }
}

TEST_CASE("invalid UTF-8 reports the byte offset") {
    try {
        load_plain_text_bytes("ab\xFF" "cd", "mem");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::data);
        CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
    }
    // offsets count the BOM when present
    try {
        load_plain_text_bytes("\xEF\xBB\xBF" "a\xC3", "mem");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("byte 4") != std::string::npos);
    }
}

TEST_CASE("orphan combining marks are dropped with a warning") {
    std::vector<std::string> warnings;
    // leading acute, then a space followed by a tilde: both orphans
    CorpusDocument doc = load_plain_text_bytes("\xCC\x81q \xCC\x83x", "mem", 1, &warnings);
    CHECK(doc.text == U"q x");
    CHECK(warnings.size() == 2);
    // attached marks stay (q + tilde does not compose, but the mark is kept)
    std::vector<std::string> none;
    CorpusDocument attached = load_plain_text_bytes("q\xCC\x83", "mem", 1, &none);
    CHECK(attached.text == std::u32string{U'q', U'\x0303'});
    CHECK(none.empty());
}

TEST_CASE("loading is deterministic and normalization idempotent") {
    TempDir dir("corpus");
    std::string bytes = "S\xC3\xAD, ma\xC3\xB1" "ana; Ola\xCC\x81 outra vez\n";
    auto path = write_file(dir.path, "mix.txt", bytes);
    CorpusDocument first = load_plain_text(path);
    CorpusDocument second = load_plain_text(path);
    CHECK(first == second);

    auto reserialized = write_file(dir.path, "mix2.txt", uni::encode_utf8(first.text));
    CorpusDocument reloaded = load_plain_text(reserialized);
    CHECK(reloaded.text == first.text);
}

TEST_CASE("word frequency list parses entries in order") {
    TempDir dir("corpus");
    auto path = write_file(dir.path, "words.tsv",
                           "# comment line\n"
                           "kalaallisut\t42\n"
                           "\n"
                           "nuna\t7\n");
    auto entries = load_word_frequency_list(path);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].word == U"kalaallisut");
    CHECK(entries[0].count == 42);
    CHECK(entries[1].word == U"nuna");
    CHECK(entries[1].count == 7);
}

TEST_CASE("word list errors carry line numbers") {
    TempDir dir("corpus");
    SUBCASE("zero count") {
        auto path = write_file(dir.path, "bad.tsv", "word\t0\n");
        try {
            load_word_frequency_list(path);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find(":1") != std::string::npos);
            CHECK(std::string(e.what()).find("nonpositive") != std::string::npos);
        }
    }
    SUBCASE("missing tab") {
        auto path = write_file(dir.path, "bad.tsv", "ok\t1\nnotab\n");
        try {
            load_word_frequency_list(path);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find(":2") != std::string::npos);
        }
    }
    SUBCASE("non-integer count") {
        auto path = write_file(dir.path, "bad.tsv", "word\tmany\n");
        CHECK_THROWS_AS(load_word_frequency_list(path), Error);
    }
    SUBCASE("empty word") {
        auto path = write_file(dir.path, "bad.tsv", " \t3\n");
        CHECK_THROWS_AS(load_word_frequency_list(path), Error);
    }
}

TEST_CASE("word list words are normalized like plain text") {
    TempDir dir("corpus");
    auto path = write_file(dir.path, "words.tsv", "n\xCC\x83u\t3\n"); // decomposed n-tilde
    auto entries = load_word_frequency_list(path);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].word == U"ñu");
}
