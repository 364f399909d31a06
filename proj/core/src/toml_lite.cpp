#include "toml_lite.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpns::detail {
namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
};

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("toml parse error: " + msg);
}

std::string parse_string(Cursor& c) {
    if (c.peek() != '"') fail("expected string");
    ++c.i;
    std::string out;
    while (!c.done() && c.peek() != '"') {
        char ch = c.s[c.i++];
        if (ch == '\\' && !c.done()) {
            const char esc = c.s[c.i++];
            switch (esc) {
                case 'n': ch = '\n'; break;
                case 't': ch = '\t'; break;
                case '"': ch = '"'; break;
                case '\\': ch = '\\'; break;
                default: fail("unsupported escape");
            }
        }
        out += ch;
    }
    if (c.done()) fail("unterminated string");
    ++c.i;
    return out;
}

nlohmann::json parse_value(Cursor& c);

nlohmann::json parse_array(Cursor& c) {
    ++c.i;  // '['
    nlohmann::json arr = nlohmann::json::array();
    for (;;) {
        c.skip_ws();
        while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
            ++c.i;
            c.skip_ws();
        }
        if (c.done()) fail("unterminated array");
        if (c.peek() == ']') {
            ++c.i;
            return arr;
        }
        arr.push_back(parse_value(c));
        c.skip_ws();
        while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
            ++c.i;
            c.skip_ws();
        }
        if (!c.done() && c.peek() == ',') ++c.i;
    }
}

nlohmann::json parse_value(Cursor& c) {
    c.skip_ws();
    if (c.done()) fail("expected value");
    const char ch = c.peek();
    if (ch == '"') return parse_string(c);
    if (ch == '[') return parse_array(c);
    // bare token: bool, inf, number
    size_t start = c.i;
    while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != '\n' &&
           c.peek() != '\r' && c.peek() != '#' && c.peek() != ' ' && c.peek() != '\t')
        ++c.i;
    std::string tok = c.s.substr(start, c.i - start);
    if (tok == "true") return true;
    if (tok == "false") return false;
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    try {
        size_t used = 0;
        if (tok.find('.') == std::string::npos && tok.find('e') == std::string::npos &&
            tok.find('E') == std::string::npos) {
            const long long v = std::stoll(tok, &used);
            if (used == tok.size()) return v;
        }
        const double v = std::stod(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    fail("cannot parse value token '" + tok + "'");
}

}  // namespace

nlohmann::json toml_lite_parse(const std::string& text) {
    nlohmann::json root = nlohmann::json::object();
    nlohmann::json* section = &root;
    Cursor c{text};
    while (!c.done()) {
        c.skip_ws();
        if (c.done()) break;
        const char ch = c.peek();
        if (ch == '\n' || ch == '\r') {
            ++c.i;
            continue;
        }
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') ++c.i;
            continue;
        }
        if (ch == '[') {
            ++c.i;
            size_t start = c.i;
            while (!c.done() && c.peek() != ']') ++c.i;
            if (c.done()) fail("unterminated section header");
            std::string name = c.s.substr(start, c.i - start);
            ++c.i;
            section = &root;
            size_t pos = 0;
            while (pos != std::string::npos) {
                const size_t dot = name.find('.', pos);
                const std::string part =
                    name.substr(pos, dot == std::string::npos ? dot : dot - pos);
                if (part.empty()) fail("empty section name");
                section = &((*section)[part]);
                pos = dot == std::string::npos ? dot : dot + 1;
            }
            continue;
        }
        // key = value
        size_t start = c.i;
        while (!c.done() && c.peek() != '=' && c.peek() != '\n') ++c.i;
        if (c.done() || c.peek() != '=') fail("expected '=' after key");
        std::string key = c.s.substr(start, c.i - start);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        if (key.empty()) fail("empty key");
        ++c.i;  // '='
        (*section)[key] = parse_value(c);
        c.skip_ws();
        if (!c.done() && c.peek() == '#')
            while (!c.done() && c.peek() != '\n') ++c.i;
    }
    return root;
}

}  // namespace mpns::detail
