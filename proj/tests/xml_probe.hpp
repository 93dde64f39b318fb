#pragma once

// Minimal XML reader for verifying emitted files: element tree with
// attributes, entity decoding for the references our emitter writes. Kept
// independent of the production code on purpose.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbtest {

struct XmlElement {
    std::string name;
    std::map<std::string, std::string> attributes; // raw values, undecoded
    std::vector<XmlElement> children;
    std::string text; // raw character data, undecoded

    const std::string& attr(const std::string& key) const {
        auto it = attributes.find(key);
        if (it == attributes.end()) throw std::runtime_error("missing attribute " + key);
        return it->second;
    }

    std::vector<const XmlElement*> find_all(std::string_view wanted) const {
        std::vector<const XmlElement*> out;
        collect(wanted, out);
        return out;
    }

private:
    void collect(std::string_view wanted, std::vector<const XmlElement*>& out) const {
        if (name == wanted) out.push_back(this);
        for (const auto& child : children) child.collect(wanted, out);
    }
};

inline std::string xml_unescape(std::string_view raw) {
    std::string out;
    std::size_t i = 0;
    auto encode_cp = [&out](unsigned long cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    };
    while (i < raw.size()) {
        if (raw[i] != '&') {
            out += raw[i++];
            continue;
        }
        std::size_t end = raw.find(';', i);
        if (end == std::string_view::npos) throw std::runtime_error("unterminated entity");
        std::string_view entity = raw.substr(i + 1, end - i - 1);
        if (entity == "amp") out += '&';
        else if (entity == "lt") out += '<';
        else if (entity == "gt") out += '>';
        else if (entity == "quot") out += '"';
        else if (entity == "apos") out += '\'';
        else if (entity.starts_with("#x") || entity.starts_with("#X"))
            encode_cp(std::stoul(std::string(entity.substr(2)), nullptr, 16));
        else if (entity.starts_with("#"))
            encode_cp(std::stoul(std::string(entity.substr(1)), nullptr, 10));
        else
            throw std::runtime_error("unknown entity &" + std::string(entity) + ";");
        i = end + 1;
    }
    return out;
}

// Parses a well-formed fragment with a single root; throws on anything the
// emitter should never produce.
inline XmlElement parse_xml(std::string_view text) {
    struct Parser {
        std::string_view text;
        std::size_t pos = 0;

        void skip_ws() {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' ||
                                         text[pos] == '\t' || text[pos] == '\r'))
                ++pos;
        }
        [[noreturn]] void fail(const std::string& message) {
            throw std::runtime_error("xml error at byte " + std::to_string(pos) + ": " + message);
        }
        std::string read_name() {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                    text[pos] == ':' || text[pos] == '-' || text[pos] == '.'))
                ++pos;
            if (pos == start) fail("expected a name");
            return std::string(text.substr(start, pos - start));
        }
        XmlElement parse_element() {
            skip_ws();
            if (pos >= text.size() || text[pos] != '<') fail("expected '<'");
            ++pos;
            XmlElement element;
            element.name = read_name();
            while (true) {
                skip_ws();
                if (pos >= text.size()) fail("unterminated element");
                if (text[pos] == '/') {
                    if (pos + 1 >= text.size() || text[pos + 1] != '>') fail("bad self-close");
                    pos += 2;
                    return element;
                }
                if (text[pos] == '>') {
                    ++pos;
                    break;
                }
                std::string key = read_name();
                skip_ws();
                if (pos >= text.size() || text[pos] != '=') fail("expected '='");
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] != '"') fail("expected '\"'");
                ++pos;
                std::size_t end = text.find('"', pos);
                if (end == std::string_view::npos) fail("unterminated attribute");
                if (!element.attributes.emplace(key, std::string(text.substr(pos, end - pos)))
                         .second)
                    fail("duplicate attribute " + key);
                pos = end + 1;
            }
            // children and character data until the matching close tag
            while (true) {
                skip_ws();
                if (pos + 1 >= text.size()) fail("missing close tag for " + element.name);
                if (text[pos] != '<') {
                    std::size_t next = text.find('<', pos);
                    if (next == std::string_view::npos)
                        fail("missing close tag for " + element.name);
                    element.text += std::string(text.substr(pos, next - pos));
                    pos = next;
                    continue;
                }
                if (text[pos] == '<' && text[pos + 1] == '/') {
                    pos += 2;
                    std::string close = read_name();
                    if (close != element.name)
                        fail("mismatched close tag " + close + " for " + element.name);
                    skip_ws();
                    if (pos >= text.size() || text[pos] != '>') fail("expected '>'");
                    ++pos;
                    return element;
                }
                element.children.push_back(parse_element());
            }
        }
    };
    Parser parser{text};
    XmlElement root = parser.parse_element();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing content");
    return root;
}

} // namespace kbtest
