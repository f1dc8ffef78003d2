#include "oml/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace oml {

namespace {

bool structural(char c) {
    switch (c) {
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
    case ',':
    case ':':
    case '=':
    case '#':
        return true;
    default:
        return false;
    }
}

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::parse_error,
             std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg);
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!try_consume(c)) error("expected '" + std::string(1, c) + "' " + what);
    }

    /// Longest run of non-space non-structural characters.
    std::string token() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               !structural(text_[pos_]))
            advance();
        if (pos_ == start) error("expected a name or number");
        return text_.substr(start, pos_ - start);
    }

    /// Field names: `Q` or `Q(rt)`.  The parenthesis is a structural
    /// character, so the suffix cannot be part of a plain token.
    std::string field_kind() {
        std::string kind = token();
        if (try_consume('(')) {
            kind += "(" + token() + ")";
            expect(')', "to close the field name");
        }
        return kind;
    }

    /// True when a `token =` key is next; the cursor does not move.
    bool key_ahead() {
        skip_ws();
        const auto save = state();
        if (pos_ >= text_.size() || structural(text_[pos_])) return false;
        token();
        const bool is_key = peek() == '=';
        restore(save);
        return is_key;
    }

    Rational rational() {
        const Int num = integer();
        if (!try_consume('/')) return Rational(num);
        skip_ws();
        const Int den = integer();
        if (den == 0) error("zero denominator");
        return Rational(num, den);
    }

    /// scalar := term { (+|-) term },  term := [-] (rational [* rt] | rt)
    Scalar scalar(const Field& f) {
        Scalar acc = term(f);
        for (;;) {
            if (try_consume('+')) {
                acc += term(f);
            } else if (peek() == '-') {
                // leave the sign for the term to consume
                acc += term(f);
            } else {
                return acc;
            }
        }
    }

    double decimal() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            advance();
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            advance();
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
        }
        const std::string tok = text_.substr(start, pos_ - start);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) error("bad decimal '" + tok + "'");
            return v;
        } catch (const std::exception&) {
            error("bad decimal '" + tok + "'");
        }
    }

    Vec vector(const Field& f) {
        expect('[', "to open a vector");
        Vec v;
        if (try_consume(']')) return v;
        do {
            v.push_back(scalar(f));
        } while (try_consume(','));
        expect(']', "to close a vector");
        return v;
    }

    Mat matrix(const Field& f) {
        expect('[', "to open a matrix");
        Mat m;
        if (try_consume(']')) return m;
        do {
            m.push_back(vector(f));
        } while (try_consume(','));
        expect(']', "to close a matrix");
        return m;
    }

    std::vector<std::pair<std::string, std::string>> pair_list() {
        std::vector<std::pair<std::string, std::string>> out;
        while (peek() == '(') {
            advance();
            std::string a = token();
            expect(',', "between pair entries");
            std::string b = token();
            expect(')', "to close a pair");
            out.emplace_back(std::move(a), std::move(b));
        }
        return out;
    }

private:
    struct State {
        std::size_t pos;
        int line, col;
    };
    State state() const { return {pos_, line_, col_}; }
    void restore(const State& s) {
        pos_ = s.pos;
        line_ = s.line;
        col_ = s.col;
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (pos_ == start) error("expected a number");
        return Int(text_.substr(start, pos_ - start));
    }

    Scalar term(const Field& f) {
        const bool neg = try_consume('-');
        skip_ws();
        Rational mag;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            mag = rational();
            if (!try_consume('*')) return f.from_rational(neg ? -mag : mag);
            // fall through to the root token
        } else {
            mag = 1;
        }
        const auto save = state();
        const std::string root = token();
        if (root != "rt") {
            restore(save);
            error("expected 'rt'");
        }
        if (f.is_rationals()) error("'rt' is not available over the rationals");
        return f.make(Rational(0), neg ? -mag : mag);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

Field field_from_header(Cursor& c, const std::string& kind,
                        const std::optional<long long>& rt2) {
    if (kind == "Q") {
        if (rt2) c.error("rt2 has no meaning over Q");
        return Field::rationals();
    }
    if (kind == "Q(rt)") {
        if (!rt2) c.error("field Q(rt) needs an rt2 = d entry");
        return Field::quadratic(*rt2);
    }
    c.error("unknown field '" + kind + "' (expected Q or Q(rt))");
}

long long small_int(Cursor& c, const std::string& what) {
    const bool neg = c.try_consume('-');
    const Rational q = c.rational();
    if (denominator(q) != 1) c.error(what + " must be an integer");
    const Int n = numerator(q);
    if (n > 1000000) c.error(what + " is out of range");
    const long long v = static_cast<long long>(n);
    return neg ? -v : v;
}

/// Shared field/rt2 header handling for files read against a known space.
bool consume_field_header(Cursor& c, const std::string& key, const SpacePtr& space,
                          bool& field_seen, bool& rt2_seen) {
    if (key == "field") {
        if (field_seen) c.error("duplicate key field");
        field_seen = true;
        const std::string kind = c.field_kind();
        const bool quadratic = kind == "Q(rt)";
        if (kind != "Q" && !quadratic) c.error("unknown field '" + kind + "'");
        if (quadratic != (space->field().kind() == FieldKind::quadratic))
            c.error("field header disagrees with the space");
        return true;
    }
    if (key == "rt2") {
        if (rt2_seen) c.error("duplicate key rt2");
        rt2_seen = true;
        if (space->field().is_rationals()) c.error("rt2 has no meaning over Q");
        if (small_int(c, "rt2") != space->field().root_square())
            c.error("rt2 disagrees with the space");
        return true;
    }
    return false;
}

} // namespace

Scalar parse_scalar(const std::string& text, const Field& field) {
    Cursor c(text);
    Scalar s = c.scalar(field);
    if (!c.at_end()) c.error("trailing input after the scalar");
    return s;
}

Vec parse_vector(const std::string& text, const Field& field) {
    Cursor c(text);
    Vec v;
    if (c.peek() == '[' || c.peek() == '(') {
        const char close = c.peek() == '[' ? ']' : ')';
        c.try_consume(c.peek());
        if (!c.try_consume(close)) {
            do {
                v.push_back(c.scalar(field));
            } while (c.try_consume(','));
            c.expect(close, "to close the vector");
        }
    } else {
        do {
            v.push_back(c.scalar(field));
        } while (c.try_consume(','));
    }
    if (!c.at_end()) c.error("trailing input after the vector");
    return v;
}

SpacePtr parse_space(const std::string& text) {
    Cursor c(text);
    std::optional<std::string> field_kind;
    std::optional<long long> rt2;
    std::optional<int> dim;
    std::optional<Mat> form;
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (key == "field") {
            if (field_kind) c.error("duplicate key field");
            field_kind = c.field_kind();
        } else if (key == "rt2") {
            if (rt2) c.error("duplicate key rt2");
            rt2 = small_int(c, "rt2");
        } else if (key == "dim") {
            if (dim) c.error("duplicate key dim");
            const long long n = small_int(c, "dim");
            if (n < 1 || n > 64) c.error("dim is out of range");
            dim = static_cast<int>(n);
        } else if (key == "form") {
            if (form) c.error("duplicate key form");
            if (!field_kind || !dim) c.error("form needs field and dim first");
            form = c.matrix(field_from_header(c, *field_kind, rt2));
        } else {
            c.error("unknown key '" + key + "' in a space file");
        }
    }
    if (!field_kind) c.error("missing key field");
    if (!dim) c.error("missing key dim");
    const Field f = field_from_header(c, *field_kind, rt2);
    if (form) return HermitianSpace::make(f, *dim, std::move(*form));
    return HermitianSpace::make(f, *dim);
}

FiniteLogic parse_logic(const std::string& text) {
    Cursor c(text);
    std::string name = "logic";
    std::optional<std::vector<std::string>> elements;
    std::optional<std::string> bottom, top;
    std::vector<std::pair<std::string, std::string>> leq, ortho;
    bool leq_seen = false, ortho_seen = false;
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (key == "logic") {
            name = c.token();
        } else if (key == "elements") {
            if (elements) c.error("duplicate key elements");
            std::vector<std::string> labels;
            while (!c.at_end() && !c.key_ahead()) labels.push_back(c.token());
            if (labels.empty()) c.error("elements list is empty");
            elements = std::move(labels);
        } else if (key == "bottom") {
            if (bottom) c.error("duplicate key bottom");
            bottom = c.token();
        } else if (key == "top") {
            if (top) c.error("duplicate key top");
            top = c.token();
        } else if (key == "leq") {
            if (leq_seen) c.error("duplicate key leq");
            leq_seen = true;
            leq = c.pair_list();
        } else if (key == "ortho") {
            if (ortho_seen) c.error("duplicate key ortho");
            ortho_seen = true;
            ortho = c.pair_list();
        } else {
            c.error("unknown key '" + key + "' in a logic file");
        }
    }
    if (!elements) c.error("missing key elements");
    if (!bottom) c.error("missing key bottom");
    if (!top) c.error("missing key top");
    return FiniteLogic::from_relations(std::move(name), std::move(*elements), leq, ortho,
                                       *bottom, *top);
}

StateMeasure parse_state(const std::string& text, const LogicPtr& logic) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    Cursor c(text);
    std::string name = "state";
    bool approx = false, approx_seen = false;
    std::optional<double> tolerance;
    std::map<std::string, std::pair<Rational, double>> values;
    bool values_seen = false;

    // values are parsed after the header, so the approx flag must come first
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (key == "state") {
            name = c.token();
        } else if (key == "approx") {
            if (approx_seen) c.error("duplicate key approx");
            approx_seen = true;
            const std::string v = c.token();
            if (v != "true" && v != "false") c.error("approx must be true or false");
            approx = v == "true";
            if (values_seen) c.error("approx must precede values");
        } else if (key == "tolerance") {
            if (tolerance) c.error("duplicate key tolerance");
            tolerance = c.decimal();
            if (*tolerance <= 0) c.error("tolerance must be positive");
        } else if (key == "values") {
            if (values_seen) c.error("duplicate key values");
            values_seen = true;
            c.expect('{', "to open the value map");
            if (!c.try_consume('}')) {
                do {
                    const std::string label = c.token();
                    c.expect(':', "after element " + label);
                    if (values.count(label)) c.error("duplicate element " + label);
                    if (approx) {
                        values[label] = {Rational(0), c.decimal()};
                    } else {
                        values[label] = {c.scalar(Field::rationals()).as_rational(), 0.0};
                        if (c.peek() == '.')
                            c.error("decimal value in exact mode; set approx = true first");
                    }
                } while (c.try_consume(','));
                c.expect('}', "to close the value map");
            }
        } else {
            c.error("unknown key '" + key + "' in a state file");
        }
    }
    if (!values_seen) c.error("missing key values");
    if (tolerance && !approx) c.error("tolerance applies to approx states only");

    const int n = logic->size();
    std::vector<Rational> exact_vals(static_cast<std::size_t>(n));
    std::vector<double> approx_vals(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& [label, val] : values) {
        int idx = -1;
        for (int i = 0; i < n; ++i)
            if (logic->labels[static_cast<std::size_t>(i)] == label) idx = i;
        if (idx < 0) c.error("unknown element " + label);
        seen[static_cast<std::size_t>(idx)] = true;
        exact_vals[static_cast<std::size_t>(idx)] = val.first;
        approx_vals[static_cast<std::size_t>(idx)] = val.second;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            c.error("missing value for element " + logic->labels[static_cast<std::size_t>(i)]);
    if (approx)
        return StateMeasure::approx(logic, std::move(approx_vals),
                                    tolerance.value_or(1e-9), std::move(name));
    return StateMeasure::exact(logic, std::move(exact_vals), std::move(name));
}

LinearSymmetry parse_symmetry(const std::string& text, const SpacePtr& space) {
    if (!space) fail(ErrorKind::bad_argument, "null space");
    Cursor c(text);
    std::optional<Mat> matrix;
    std::optional<std::string> aut;
    bool field_seen = false, rt2_seen = false;
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (consume_field_header(c, key, space, field_seen, rt2_seen)) continue;
        if (key == "matrix") {
            if (matrix) c.error("duplicate key matrix");
            matrix = c.matrix(space->field());
        } else if (key == "aut") {
            if (aut) c.error("duplicate key aut");
            aut = c.token();
            if (*aut != "id" && *aut != "conj") c.error("aut must be id or conj");
            if (*aut == "conj" && space->field().is_rationals())
                c.error("conj needs a quadratic field");
        } else {
            c.error("unknown key '" + key + "' in a symmetry file");
        }
    }
    if (!matrix) c.error("missing key matrix");
    const FieldAutomorphism g{space->field(), aut && *aut == "conj"};
    return make_symmetry(space, std::move(*matrix), g);
}

std::vector<Vec> parse_atom_vectors(const std::string& text, const SpacePtr& space) {
    if (!space) fail(ErrorKind::bad_argument, "null space");
    Cursor c(text);
    std::optional<Mat> rows;
    bool field_seen = false, rt2_seen = false;
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (consume_field_header(c, key, space, field_seen, rt2_seen)) continue;
        if (key == "atoms") {
            if (rows) c.error("duplicate key atoms");
            rows = c.matrix(space->field());
        } else {
            c.error("unknown key '" + key + "' in an atoms file");
        }
    }
    if (!rows) c.error("missing key atoms");
    return std::move(*rows);
}

std::vector<Effect> parse_effects(const std::string& text) {
    Cursor c(text);
    std::optional<long long> arity;
    std::optional<Mat> rows;
    while (!c.at_end()) {
        const std::string key = c.token();
        c.expect('=', "after key " + key);
        if (key == "arity") {
            if (arity) c.error("duplicate key arity");
            arity = small_int(c, "arity");
            if (*arity < 1) c.error("arity must be positive");
        } else if (key == "effects") {
            if (rows) c.error("duplicate key effects");
            rows = c.matrix(Field::rationals());
        } else {
            c.error("unknown key '" + key + "' in an effects file");
        }
    }
    if (!rows) c.error("missing key effects");
    std::vector<Effect> out;
    for (const auto& row : *rows) {
        Effect e;
        for (const auto& s : row) e.push_back(s.as_rational());
        if (arity && static_cast<long long>(e.size()) != *arity)
            c.error("effect row length differs from arity");
        if (!out.empty() && e.size() != out.front().size())
            c.error("effect rows have mixed lengths");
        out.push_back(std::move(e));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::parse_error, path + ": cannot read file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace oml
