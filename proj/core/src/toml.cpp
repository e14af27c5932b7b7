#include "judgecal/toml.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "judgecal/errors.hpp"

namespace judgecal::toml {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ConfigError("TOML line " + std::to_string(line) + ": " + msg);
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t line;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char take() { return s[pos++]; }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
};

bool is_bare_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_basic_string(Cursor& c) {
    std::string out;
    c.take();  // opening quote
    while (true) {
        if (c.done()) fail(c.line, "unterminated string");
        char ch = c.take();
        if (ch == '"') return out;
        if (ch == '\\') {
            if (c.done()) fail(c.line, "dangling escape");
            char esc = c.take();
            switch (esc) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case 'r': out.push_back('\r'); break;
                case 'u': {
                    if (c.pos + 4 > c.s.size()) fail(c.line, "short \\u escape");
                    unsigned code = 0;
                    for (int i = 0; i < 4; ++i) {
                        char h = c.take();
                        code <<= 4;
                        if (h >= '0' && h <= '9') code |= static_cast<unsigned>(h - '0');
                        else if (h >= 'a' && h <= 'f') code |= static_cast<unsigned>(h - 'a' + 10);
                        else if (h >= 'A' && h <= 'F') code |= static_cast<unsigned>(h - 'A' + 10);
                        else fail(c.line, "bad \\u escape");
                    }
                    // encode as UTF-8 (BMP only)
                    if (code < 0x80) {
                        out.push_back(static_cast<char>(code));
                    } else if (code < 0x800) {
                        out.push_back(static_cast<char>(0xC0 | (code >> 6)));
                        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                    } else {
                        out.push_back(static_cast<char>(0xE0 | (code >> 12)));
                        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
                    }
                    break;
                }
                default: fail(c.line, std::string("unsupported escape \\") + esc);
            }
        } else {
            out.push_back(ch);
        }
    }
}

std::string parse_literal_string(Cursor& c) {
    std::string out;
    c.take();  // opening quote
    while (true) {
        if (c.done()) fail(c.line, "unterminated literal string");
        char ch = c.take();
        if (ch == '\'') return out;
        out.push_back(ch);
    }
}

json parse_scalar(Cursor& c);

json parse_array(Cursor& c, const std::function<bool(Cursor&)>& refill) {
    json arr = json::array();
    c.take();  // '['
    while (true) {
        c.skip_ws();
        // arrays may span lines
        while (c.done() || c.peek() == '#') {
            if (!refill(c)) fail(c.line, "unterminated array");
            c.skip_ws();
        }
        if (c.peek() == ']') {
            c.take();
            return arr;
        }
        arr.push_back(parse_scalar(c));
        c.skip_ws();
        while (c.done() || c.peek() == '#') {
            if (!refill(c)) fail(c.line, "unterminated array");
            c.skip_ws();
        }
        if (c.peek() == ',') {
            c.take();
            continue;
        }
        if (c.peek() == ']') {
            c.take();
            return arr;
        }
        fail(c.line, "expected ',' or ']' in array");
    }
}

json parse_scalar(Cursor& c) {
    c.skip_ws();
    if (c.done()) fail(c.line, "missing value");
    char ch = c.peek();
    if (ch == '"') return parse_basic_string(c);
    if (ch == '\'') return parse_literal_string(c);

    // bare token up to whitespace, comma, bracket or comment
    std::size_t start = c.pos;
    while (!c.done()) {
        char t = c.peek();
        if (t == ',' || t == ']' || t == '#' || t == ' ' || t == '\t') break;
        c.take();
    }
    std::string tok(c.s.substr(start, c.pos - start));
    if (tok.empty()) fail(c.line, "missing value");
    if (tok == "true") return true;
    if (tok == "false") return false;

    const bool looks_float = tok.find_first_of(".eE") != std::string::npos &&
                             tok.find_first_of("0123456789") != std::string::npos;
    errno = 0;
    char* end = nullptr;
    if (!looks_float) {
        long long v = std::strtoll(tok.c_str(), &end, 10);
        if (errno == 0 && end && *end == '\0') return v;
    }
    errno = 0;
    double d = std::strtod(tok.c_str(), &end);
    if (errno == 0 && end && *end == '\0') return d;
    fail(c.line, "cannot parse value '" + tok + "'");
}

std::vector<std::string> parse_key_path(Cursor& c) {
    std::vector<std::string> path;
    while (true) {
        c.skip_ws();
        if (c.done()) fail(c.line, "missing key");
        std::string part;
        if (c.peek() == '"') {
            part = parse_basic_string(c);
        } else {
            std::size_t start = c.pos;
            while (!c.done() && is_bare_key_char(c.peek())) c.take();
            part = std::string(c.s.substr(start, c.pos - start));
        }
        if (part.empty()) fail(c.line, "empty key");
        path.push_back(std::move(part));
        c.skip_ws();
        if (!c.done() && c.peek() == '.') {
            c.take();
            continue;
        }
        return path;
    }
}

}  // namespace

nlohmann::json parse(std::string_view text) {
    json root = json::object();
    json* current = &root;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;

    // Pulls the next physical line into the cursor; used by multi-line arrays.
    std::vector<std::string> line_store;
    auto next_line = [&](Cursor& c) -> bool {
        if (!std::getline(in, raw)) return false;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        line_store.push_back(raw);
        c.s = line_store.back();
        c.pos = 0;
        c.line = line_no;
        return true;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        line_store.push_back(raw);
        Cursor c{line_store.back(), 0, line_no};
        c.skip_ws();
        if (c.done() || c.peek() == '#') continue;

        if (c.peek() == '[') {
            c.take();
            if (!c.done() && c.peek() == '[')
                fail(line_no, "table arrays are not supported");
            auto path = parse_key_path(c);
            c.skip_ws();
            if (c.done() || c.take() != ']') fail(line_no, "expected ']' after table name");
            c.skip_ws();
            if (!c.done() && c.peek() != '#') fail(line_no, "trailing characters after table header");
            current = &root;
            for (const auto& part : path) {
                if (!current->contains(part)) (*current)[part] = json::object();
                current = &(*current)[part];
                if (!current->is_object())
                    fail(line_no, "table name collides with existing value: " + part);
            }
            continue;
        }

        auto path = parse_key_path(c);
        c.skip_ws();
        if (c.done() || c.take() != '=') fail(line_no, "expected '=' after key");
        c.skip_ws();
        if (c.done()) fail(line_no, "missing value");

        json value;
        if (c.peek() == '[') {
            value = parse_array(c, next_line);
        } else {
            value = parse_scalar(c);
        }
        c.skip_ws();
        if (!c.done() && c.peek() != '#') fail(c.line, "trailing characters after value");

        json* target = current;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!target->contains(path[i])) (*target)[path[i]] = json::object();
            target = &(*target)[path[i]];
            if (!target->is_object()) fail(line_no, "dotted key collides with value");
        }
        const std::string& leaf = path.back();
        if (target->contains(leaf)) fail(line_no, "duplicate key: " + leaf);
        (*target)[leaf] = std::move(value);
    }
    return root;
}

nlohmann::json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse(text);
}

}  // namespace judgecal::toml
