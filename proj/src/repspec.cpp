#include "pirep/repspec.hpp"

#include <fstream>
#include <sstream>
#include <variant>

namespace pirep {

namespace {

struct Pos {
    int line = 1;
    int col = 1;
};

struct Value;
using Array = std::vector<Value>;

struct Value {
    std::variant<std::string, Int, Array> v; // string | integer | array
    bool quoted = false;                     // distinguishes "1" from 1
    Pos pos;
};

class Parser {
  public:
    Parser(const std::string &text, std::string filename)
        : text_(text), file_(std::move(filename)) {}

    std::vector<std::pair<std::string, Value>> parse() {
        std::vector<std::pair<std::string, Value>> out;
        skip_space();
        while (!eof()) {
            std::string key = read_key();
            skip_space();
            expect('=');
            skip_space();
            out.emplace_back(key, read_value());
            skip_space();
        }
        return out;
    }

    [[noreturn]] void fail(const Pos &pos, const std::string &msg) const {
        std::ostringstream os;
        os << file_ << ":" << pos.line << ":" << pos.col << ": " << msg;
        throw input_error(os.str());
    }

  private:
    const std::string &text_;
    std::string file_;
    std::size_t i_ = 0;
    Pos pos_;

    bool eof() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    char get() {
        char c = text_[i_++];
        if (c == '\n') {
            pos_.line++;
            pos_.col = 1;
        } else {
            pos_.col++;
        }
        return c;
    }
    void skip_space() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n')
                    get();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else {
                break;
            }
        }
    }
    void expect(char c) {
        if (eof() || peek() != c)
            fail(pos_, std::string("expected '") + c + "'");
        get();
    }
    std::string read_key() {
        Pos start = pos_;
        std::string key;
        while (!eof() && (isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            key += get();
        if (key.empty())
            fail(start, "expected a key");
        return key;
    }
    Value read_value() {
        if (eof())
            fail(pos_, "expected a value");
        Pos start = pos_;
        char c = peek();
        if (c == '"') {
            get();
            std::string s;
            while (!eof() && peek() != '"') {
                if (peek() == '\n')
                    fail(start, "unterminated string");
                s += get();
            }
            if (eof())
                fail(start, "unterminated string");
            get();
            Value v;
            v.v = s;
            v.quoted = true;
            v.pos = start;
            return v;
        }
        if (c == '[') {
            get();
            Array arr;
            skip_space();
            while (!eof() && peek() != ']') {
                arr.push_back(read_value());
                skip_space();
                if (!eof() && peek() == ',') {
                    get();
                    skip_space();
                }
            }
            if (eof())
                fail(start, "unterminated array");
            get();
            Value v;
            v.v = std::move(arr);
            v.pos = start;
            return v;
        }
        if (c == '-' || c == '+' || isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            num += get();
            while (!eof() && (isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                              peek() == 'e' || peek() == 'E' || peek() == '/'))
                num += get();
            if (num.find('.') != std::string::npos || num.find('e') != std::string::npos ||
                num.find('E') != std::string::npos)
                fail(start, "floating-point literals are not accepted; use \"p/q\" strings");
            if (num.find('/') != std::string::npos)
                fail(start, "fractions must be quoted strings like \"1/3\"");
            for (std::size_t k = (num[0] == '-' || num[0] == '+') ? 1 : 0; k < num.size(); ++k)
                if (!isdigit(static_cast<unsigned char>(num[k])))
                    fail(start, "malformed integer '" + num + "'");
            if (num.size() == ((num[0] == '-' || num[0] == '+') ? 1u : 0u))
                fail(start, "malformed integer");
            Value v;
            v.v = Int(num);
            v.pos = start;
            return v;
        }
        fail(start, std::string("unexpected character '") + c + "'");
    }
};

Rat entry_to_rat(const Parser &parser, const Value &v) {
    if (std::holds_alternative<Int>(v.v))
        return Rat(std::get<Int>(v.v));
    if (std::holds_alternative<std::string>(v.v)) {
        try {
            return rat_from_string(std::get<std::string>(v.v));
        } catch (const input_error &e) {
            parser.fail(v.pos, e.what());
        }
    }
    parser.fail(v.pos, "matrix entry must be an integer or a \"p/q\" string");
}

} // namespace

RepSpec parse_spec_text(const std::string &text, const std::string &filename) {
    Parser parser(text, filename);
    auto pairs = parser.parse();

    RepSpec spec;
    spec.source_path = filename;
    bool have_name = false, have_dim = false, have_gens = false;
    Pos zero;
    for (const auto &[key, value] : pairs) {
        if (key == "name") {
            if (!std::holds_alternative<std::string>(value.v) || !value.quoted)
                parser.fail(value.pos, "name must be a quoted string");
            spec.name = std::get<std::string>(value.v);
            have_name = true;
        } else if (key == "dim_v") {
            if (!std::holds_alternative<Int>(value.v))
                parser.fail(value.pos, "dim_v must be a positive integer");
            Int d = std::get<Int>(value.v);
            if (d <= 0 || !d.fits_ulong_p())
                parser.fail(value.pos, "dim_v must be a positive integer");
            spec.dim_v = d.get_ui();
            have_dim = true;
        } else if (key == "generators") {
            if (!std::holds_alternative<Array>(value.v))
                parser.fail(value.pos, "generators must be an array of matrices");
            have_gens = true;
            if (!have_dim)
                parser.fail(value.pos, "dim_v must appear before generators");
            for (const Value &mat : std::get<Array>(value.v)) {
                if (!std::holds_alternative<Array>(mat.v))
                    parser.fail(mat.pos, "each generator must be an array of rows");
                const Array &rows = std::get<Array>(mat.v);
                if (rows.size() != spec.dim_v)
                    parser.fail(mat.pos, "generator has " + std::to_string(rows.size()) +
                                             " rows, expected " + std::to_string(spec.dim_v));
                RatMatrix m(spec.dim_v, spec.dim_v);
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (!std::holds_alternative<Array>(rows[i].v))
                        parser.fail(rows[i].pos, "matrix row must be an array");
                    const Array &row = std::get<Array>(rows[i].v);
                    if (row.size() != spec.dim_v)
                        parser.fail(rows[i].pos,
                                    "row has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(spec.dim_v));
                    for (std::size_t j = 0; j < row.size(); ++j)
                        m.at(i, j) = entry_to_rat(parser, row[j]);
                }
                spec.generators.push_back(std::move(m));
            }
        } else {
            parser.fail(value.pos, "unknown key '" + key + "'");
        }
    }
    if (!have_name)
        parser.fail(zero, "missing required key 'name'");
    if (!have_dim)
        parser.fail(zero, "missing required key 'dim_v'");
    if (!have_gens)
        parser.fail(zero, "missing required key 'generators'");
    return spec;
}

RepSpec parse_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

std::string canonical_content(const RepSpec &spec) {
    std::ostringstream os;
    os << "v1;dim_v=" << spec.dim_v << ";generators=";
    for (const auto &g : spec.generators) {
        os << "[";
        for (const auto &e : g.entries())
            os << rat_to_string(e) << ",";
        os << "]";
    }
    return os.str();
}

LinearRep make_rep(const RepSpec &spec) { return close_under_bracket(spec.generators, spec.dim_v); }

} // namespace pirep
