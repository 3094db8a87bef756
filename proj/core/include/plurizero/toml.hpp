#ifndef PLURIZERO_TOML_HPP
#define PLURIZERO_TOML_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace plurizero::toml {

/// Minimal TOML document model covering the experiment-config subset:
/// top-level key/value pairs, [tables], [[arrays of tables]], strings,
/// integers, floats, booleans, and (nested) arrays.
struct Value {
    enum class Kind { string, integer, real, boolean, array, table };
    Kind kind = Kind::table;
    std::string str;
    std::int64_t integer = 0;
    double real = 0.0;
    bool boolean = false;
    std::vector<Value> array;
    std::map<std::string, Value> table;

    static Value make_string(std::string s);
    static Value make_integer(std::int64_t v);
    static Value make_real(double v);
    static Value make_boolean(bool v);
    static Value make_array(std::vector<Value> v);
    static Value make_table();

    bool is_number() const { return kind == Kind::integer || kind == Kind::real; }
    double as_real() const;  // integer or real

    bool operator==(const Value& other) const;
};

/// Parse a document; throws std::invalid_argument with a line reference on
/// malformed input.
Value parse(const std::string& text);

/// Canonical serialization (sorted keys, normalized literals). Documents
/// round-trip: parse(serialize(parse(t))) == parse(t).
std::string serialize(const Value& root);

}  // namespace plurizero::toml

#endif
