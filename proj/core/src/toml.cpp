#include "plurizero/toml.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace plurizero::toml {

Value Value::make_string(std::string s) {
    Value v;
    v.kind = Kind::string;
    v.str = std::move(s);
    return v;
}
Value Value::make_integer(std::int64_t x) {
    Value v;
    v.kind = Kind::integer;
    v.integer = x;
    return v;
}
Value Value::make_real(double x) {
    Value v;
    v.kind = Kind::real;
    v.real = x;
    return v;
}
Value Value::make_boolean(bool x) {
    Value v;
    v.kind = Kind::boolean;
    v.boolean = x;
    return v;
}
Value Value::make_array(std::vector<Value> x) {
    Value v;
    v.kind = Kind::array;
    v.array = std::move(x);
    return v;
}
Value Value::make_table() { return Value{}; }

double Value::as_real() const {
    if (kind == Kind::integer) return static_cast<double>(integer);
    if (kind == Kind::real) return real;
    throw std::invalid_argument("toml: value is not a number");
}

bool Value::operator==(const Value& other) const {
    if (kind != other.kind) {
        if (is_number() && other.is_number()) return as_real() == other.as_real();
        return false;
    }
    switch (kind) {
        case Kind::string: return str == other.str;
        case Kind::integer: return integer == other.integer;
        case Kind::real: return real == other.real;
        case Kind::boolean: return boolean == other.boolean;
        case Kind::array: return array == other.array;
        case Kind::table: return table == other.table;
    }
    return false;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("toml parse error (line " + std::to_string(line) + "): " +
                                    msg);
    }
    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        const char c = text[pos++];
        if (c == '\n') ++line;  // only reached via explicit newline consumption
        return c;
    }
    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    void skip_to_eol() {
        while (!eof() && peek() != '\n') ++pos;
    }
};

std::string parse_bare_key(Cursor& c) {
    std::string key;
    while (!c.eof()) {
        const char ch = c.peek();
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') {
            key.push_back(ch);
            ++c.pos;
        } else {
            break;
        }
    }
    if (key.empty()) c.fail("expected a key");
    return key;
}

std::string parse_basic_string(Cursor& c) {
    if (c.peek() != '"') c.fail("expected '\"'");
    ++c.pos;
    std::string out;
    while (!c.eof() && c.peek() != '"') {
        char ch = c.peek();
        if (ch == '\n') c.fail("unterminated string");
        if (ch == '\\') {
            ++c.pos;
            if (c.eof()) c.fail("dangling escape");
            const char esc = c.peek();
            switch (esc) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                default: c.fail(std::string("unsupported escape \\") + esc);
            }
            ++c.pos;
        } else {
            out.push_back(ch);
            ++c.pos;
        }
    }
    if (c.eof()) c.fail("unterminated string");
    ++c.pos;  // closing quote
    return out;
}

Value parse_value(Cursor& c);

Value parse_array(Cursor& c) {
    if (c.peek() != '[') c.fail("expected '['");
    ++c.pos;
    std::vector<Value> items;
    for (;;) {
        c.skip_spaces();
        if (!c.eof() && c.peek() == '\n') {  // arrays may span lines
            ++c.pos;
            ++c.line;
            continue;
        }
        if (c.eof()) c.fail("unterminated array");
        if (c.peek() == ']') {
            ++c.pos;
            break;
        }
        items.push_back(parse_value(c));
        c.skip_spaces();
        while (!c.eof() && c.peek() == '\n') {
            ++c.pos;
            ++c.line;
            c.skip_spaces();
        }
        if (c.eof()) c.fail("unterminated array");
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        if (c.peek() == ']') {
            ++c.pos;
            break;
        }
        c.fail("expected ',' or ']' in array");
    }
    return Value::make_array(std::move(items));
}

Value parse_number_or_bool(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.eof()) {
        const char ch = c.peek();
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' ||
            ch == '.' || ch == '_') {
            ++c.pos;
        } else {
            break;
        }
    }
    std::string token = c.text.substr(start, c.pos - start);
    if (token.empty()) c.fail("expected a value");
    if (token == "true") return Value::make_boolean(true);
    if (token == "false") return Value::make_boolean(false);
    std::string digits;
    for (char ch : token)
        if (ch != '_') digits.push_back(ch);
    const bool looks_integer = digits.find_first_of(".eE") == std::string::npos;
    if (looks_integer) {
        std::int64_t v = 0;
        const auto [ptr, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec == std::errc{} && ptr == digits.data() + digits.size())
            return Value::make_integer(v);
    }
    try {
        std::size_t consumed = 0;
        const double v = std::stod(digits, &consumed);
        if (consumed != digits.size()) c.fail("malformed number '" + token + "'");
        return Value::make_real(v);
    } catch (const std::exception&) {
        c.fail("malformed value '" + token + "'");
    }
}

Value parse_value(Cursor& c) {
    c.skip_spaces();
    if (c.eof()) c.fail("expected a value");
    const char ch = c.peek();
    if (ch == '"') return Value::make_string(parse_basic_string(c));
    if (ch == '[') return parse_array(c);
    return parse_number_or_bool(c);
}

void expect_line_end(Cursor& c) {
    c.skip_spaces();
    if (!c.eof() && c.peek() == '#') c.skip_to_eol();
    if (c.eof()) return;
    if (c.peek() != '\n') c.fail("unexpected trailing characters");
    ++c.pos;
    ++c.line;
}

}  // namespace

Value parse(const std::string& text) {
    Value root = Value::make_table();
    Cursor c{text};
    Value* current = &root;
    while (!c.eof()) {
        c.skip_spaces();
        if (c.eof()) break;
        const char ch = c.peek();
        if (ch == '\n') {
            ++c.pos;
            ++c.line;
            continue;
        }
        if (ch == '#') {
            c.skip_to_eol();
            continue;
        }
        if (ch == '[') {
            ++c.pos;
            const bool array_of_tables = !c.eof() && c.peek() == '[';
            if (array_of_tables) ++c.pos;
            c.skip_spaces();
            const std::string name = parse_bare_key(c);
            c.skip_spaces();
            if (c.eof() || c.peek() != ']') c.fail("expected ']'");
            ++c.pos;
            if (array_of_tables) {
                if (c.eof() || c.peek() != ']') c.fail("expected ']]'");
                ++c.pos;
            }
            expect_line_end(c);
            Value& slot = root.table[name];
            if (array_of_tables) {
                if (slot.kind == Value::Kind::table && slot.table.empty() && slot.array.empty())
                    slot = Value::make_array({});
                if (slot.kind != Value::Kind::array)
                    c.fail("'" + name + "' is both a table and an array of tables");
                slot.array.push_back(Value::make_table());
                current = &slot.array.back();
            } else {
                if (!(slot.kind == Value::Kind::table))
                    c.fail("'" + name + "' redefined with a different type");
                current = &slot;
            }
            continue;
        }
        const std::string key = parse_bare_key(c);
        c.skip_spaces();
        if (c.eof() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
        ++c.pos;
        c.skip_spaces();
        Value value = parse_value(c);
        expect_line_end(c);
        if (current->table.count(key)) c.fail("duplicate key '" + key + "'");
        current->table[key] = std::move(value);
    }
    return root;
}

namespace {

std::string format_real(double v) {
    if (v == static_cast<std::int64_t>(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<std::int64_t>(v)) + ".0";
    }
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string serialize_scalar(const Value& v) {
    switch (v.kind) {
        case Value::Kind::string: {
            std::string out = "\"";
            for (char ch : v.str) {
                if (ch == '"' || ch == '\\') out.push_back('\\');
                out.push_back(ch);
            }
            return out + "\"";
        }
        case Value::Kind::integer: return std::to_string(v.integer);
        case Value::Kind::real: return format_real(v.real);
        case Value::Kind::boolean: return v.boolean ? "true" : "false";
        case Value::Kind::array: {
            std::string out = "[";
            for (std::size_t i = 0; i < v.array.size(); ++i) {
                if (i) out += ", ";
                out += serialize_scalar(v.array[i]);
            }
            return out + "]";
        }
        case Value::Kind::table:
            throw std::invalid_argument("toml serialize: nested inline tables unsupported");
    }
    return "";
}

void serialize_table_body(const Value& t, std::string& out) {
    for (const auto& [key, value] : t.table) {
        if (value.kind == Value::Kind::table) continue;
        if (value.kind == Value::Kind::array && !value.array.empty() &&
            value.array.front().kind == Value::Kind::table)
            continue;
        out += key + " = " + serialize_scalar(value) + "\n";
    }
}

}  // namespace

std::string serialize(const Value& root) {
    if (root.kind != Value::Kind::table)
        throw std::invalid_argument("toml serialize: root must be a table");
    std::string out;
    serialize_table_body(root, out);
    for (const auto& [key, value] : root.table) {
        if (value.kind == Value::Kind::table) {
            out += "\n[" + key + "]\n";
            serialize_table_body(value, out);
        } else if (value.kind == Value::Kind::array && !value.array.empty() &&
                   value.array.front().kind == Value::Kind::table) {
            for (const Value& item : value.array) {
                out += "\n[[" + key + "]]\n";
                serialize_table_body(item, out);
            }
        }
    }
    return out;
}

}  // namespace plurizero::toml
