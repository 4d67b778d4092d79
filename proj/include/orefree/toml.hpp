#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orefree/errors.hpp"

namespace orefree {

/// Minimal TOML subset for instance files: [section] headers, bare keys,
/// string / integer / boolean scalars and arrays of strings.  Keys are
/// flattened to dotted paths.  Errors carry line and column.
struct TomlValue {
    enum class Kind { String, Integer, Boolean, StringArray };
    Kind kind = Kind::String;
    std::string str;
    long long integer = 0;
    bool boolean = false;
    std::vector<std::string> array;
};

using TomlTable = std::map<std::string, TomlValue>;

namespace detail {

inline bool toml_bare_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

inline std::string toml_parse_string(const std::string& line, std::size_t& i, std::size_t lineno) {
    std::string out;
    ++i;  // opening quote
    while (i < line.size() && line[i] != '"') {
        if (line[i] == '\\') {
            ++i;
            if (i >= line.size()) throw ParseError("dangling escape in string", lineno, i);
            switch (line[i]) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: throw ParseError("unsupported escape in string", lineno, i + 1);
            }
        } else {
            out += line[i];
        }
        ++i;
    }
    if (i >= line.size()) throw ParseError("unterminated string", lineno, line.size());
    ++i;  // closing quote
    return out;
}

inline TomlValue toml_parse_value(const std::string& line, std::size_t& i, std::size_t lineno);

inline TomlValue toml_parse_array(const std::string& line, std::size_t& i, std::size_t lineno) {
    TomlValue v;
    v.kind = TomlValue::Kind::StringArray;
    ++i;  // '['
    for (;;) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) throw ParseError("unterminated array", lineno, i);
        if (line[i] == ']') {
            ++i;
            return v;
        }
        TomlValue elem = toml_parse_value(line, i, lineno);
        if (elem.kind == TomlValue::Kind::String)
            v.array.push_back(elem.str);
        else if (elem.kind == TomlValue::Kind::Integer)
            v.array.push_back(std::to_string(elem.integer));
        else
            throw ParseError("arrays may hold strings or integers", lineno, i);
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
        }
    }
}

inline TomlValue toml_parse_value(const std::string& line, std::size_t& i, std::size_t lineno) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) throw ParseError("missing value", lineno, i);
    TomlValue v;
    char c = line[i];
    if (c == '"') {
        v.kind = TomlValue::Kind::String;
        v.str = toml_parse_string(line, i, lineno);
        return v;
    }
    if (c == '[') return toml_parse_array(line, i, lineno);
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = i;
        if (c == '-') ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i < line.size() && line[i] == '.')
            throw ParseError("floating point values are not supported; quote exact fractions", lineno,
                             i + 1);
        v.kind = TomlValue::Kind::Integer;
        v.integer = std::stoll(line.substr(start, i - start));
        return v;
    }
    if (line.compare(i, 4, "true") == 0) {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = true;
        i += 4;
        return v;
    }
    if (line.compare(i, 5, "false") == 0) {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = false;
        i += 5;
        return v;
    }
    throw ParseError("unrecognized value", lineno, i + 1);
}

}  // namespace detail

inline TomlTable toml_parse(const std::string& text) {
    TomlTable table;
    std::istringstream in(text);
    std::string raw;
    std::string prefix;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        // strip comment (quotes respected)
        std::string line;
        bool in_string = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            char c = raw[i];
            if (c == '"' && (i == 0 || raw[i - 1] != '\\')) in_string = !in_string;
            if (c == '#' && !in_string) break;
            line += c;
        }
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) continue;
        if (line[i] == '[') {
            std::size_t close = line.find(']', i);
            if (close == std::string::npos) throw ParseError("unterminated section header", lineno, i + 1);
            prefix = line.substr(i + 1, close - i - 1);
            for (char c : prefix)
                if (!detail::toml_bare_char(c)) throw ParseError("bad section name", lineno, i + 1);
            i = close + 1;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i != line.size()) throw ParseError("trailing input after section header", lineno, i + 1);
            continue;
        }
        std::size_t key_start = i;
        while (i < line.size() && detail::toml_bare_char(line[i])) ++i;
        if (i == key_start) throw ParseError("expected a key", lineno, i + 1);
        std::string key = line.substr(key_start, i - key_start);
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] != '=') throw ParseError("expected '=' after key", lineno, i + 1);
        ++i;
        TomlValue v = detail::toml_parse_value(line, i, lineno);
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i != line.size()) throw ParseError("trailing input after value", lineno, i + 1);
        std::string full = prefix.empty() ? key : prefix + "." + key;
        if (table.count(full)) throw ParseError("duplicate key '" + full + "'", lineno, 1);
        table[full] = std::move(v);
    }
    return table;
}

inline TomlTable toml_parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return toml_parse(buf.str());
}

}  // namespace orefree
