#include "folkit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "folkit/errors.hpp"
#include "folkit/rat.hpp"

namespace folkit {
namespace {

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < src.size()) {
            ++pos;
            ++col;
        }
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line, col); }
};

struct Parser {
    Lexer lx;
    const std::vector<std::string>& vars;

    Parser(const std::string& src, const std::vector<std::string>& v) : lx(src), vars(v) {}

    MPoly parse() {
        MPoly p = expr();
        if (lx.peek() != '\0') lx.fail("unexpected trailing input");
        return p;
    }

    MPoly expr() {
        bool neg = false;
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
            } else if (c == '-') {
                lx.get();
                neg = !neg;
            } else {
                break;
            }
        }
        MPoly p = term();
        if (neg) p = -p;
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                p = p + term();
            } else if (c == '-') {
                lx.get();
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }

    MPoly term() {
        MPoly p = power();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                lx.get();
                p = p * power();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                // implicit multiplication: "2x", "x y", "3(x+y)"
                p = p * power();
            } else {
                break;
            }
        }
        return p;
    }

    MPoly power() {
        MPoly base = atom();
        if (lx.peek() == '^') {
            lx.get();
            long e = integer_literal();
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    long integer_literal() {
        if (lx.peek() == '(') lx.fail("exponent must be a non-negative integer literal");
        char c = lx.peek();
        if (c == '-') lx.fail("negative exponents are not allowed");
        if (!std::isdigit(static_cast<unsigned char>(c))) lx.fail("expected integer exponent");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(lx.src[lx.pos]))) {
            v = v * 10 + (lx.get() - '0');
            if (lx.pos >= lx.src.size()) break;
        }
        return v;
    }

    MPoly atom() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            MPoly p = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.get();
            return p;
        }
        if (c == '-') {
            lx.get();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (lx.pos < lx.src.size() &&
                   std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
                num += lx.get();
            if (lx.peek() == '/') {
                size_t save = lx.pos;
                int sl = lx.line, sc = lx.col;
                lx.get();
                if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                    std::string den;
                    while (lx.pos < lx.src.size() &&
                           std::isdigit(static_cast<unsigned char>(lx.src[lx.pos])))
                        den += lx.get();
                    auto q = rat_parse(num + "/" + den);
                    if (!q) lx.fail("invalid rational literal");
                    return MPoly::constant(vars, FieldElem(*q));
                }
                lx.pos = save;
                lx.line = sl;
                lx.col = sc;
            }
            return MPoly::constant(vars, FieldElem(Rat(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int vline = lx.line, vcol = lx.col;
            std::string name;
            while (lx.pos < lx.src.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.src[lx.pos])) ||
                    lx.src[lx.pos] == '_'))
                name += lx.get();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw UnknownVariable(name, vline, vcol);
            return MPoly::variable(vars, static_cast<size_t>(it - vars.begin()));
        }
        lx.fail("unexpected character");
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& v : out) {
        size_t a = v.find_first_not_of(" \t");
        size_t b = v.find_last_not_of(" \t");
        v = a == std::string::npos ? "" : v.substr(a, b - a + 1);
    }
    return out;
}

} // namespace

MPoly parse_expression(const std::string& src, const std::vector<std::string>& vars) {
    Parser p(src, vars);
    return p.parse();
}

std::vector<MPoly> SourceCase::parsed_components() const {
    std::vector<MPoly> out;
    for (const auto& s : field_components) out.push_back(parse_expression(s, variables));
    return out;
}

std::vector<MPoly> SourceCase::parsed_curves() const {
    std::vector<MPoly> out;
    for (const auto& s : curves) out.push_back(parse_expression(s, variables));
    return out;
}

std::vector<MPoly> SourceCase::parsed_automorphism() const {
    std::vector<MPoly> out;
    for (const auto& s : automorphism) out.push_back(parse_expression(s, variables));
    return out;
}

std::vector<MPoly> SourceCase::parsed_automorphism_inverse() const {
    std::vector<MPoly> out;
    for (const auto& s : automorphism_inverse) out.push_back(parse_expression(s, variables));
    return out;
}

SourceCase parse_case_text(const std::string& text, const std::string& display_name) {
    SourceCase sc;
    std::vector<std::string> violations;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            violations.push_back(display_name + ":" + std::to_string(lineno) +
                                 ": expected 'key = value'");
            continue;
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            size_t x = s.find_first_not_of(" \t\r");
            size_t y = s.find_last_not_of(" \t\r");
            s = x == std::string::npos ? "" : s.substr(x, y - x + 1);
        };
        trim(key);
        trim(value);
        if (key == "name") {
            sc.name = value;
        } else if (key == "vars") {
            sc.variables = split_list(value);
        } else if (key == "field") {
            sc.field_components = split_list(value);
        } else if (key == "curve") {
            sc.curves.push_back(value);
        } else if (key == "auto") {
            sc.automorphism = split_list(value);
        } else if (key == "auto_inv") {
            sc.automorphism_inverse = split_list(value);
        } else if (key.rfind("expect ", 0) == 0) {
            std::string ename = key.substr(7);
            trim(ename);
            sc.expected[ename] = value;
        } else {
            violations.push_back(display_name + ":" + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
        }
    }
    if (sc.name.empty()) violations.push_back("missing 'name'");
    if (sc.variables.empty()) violations.push_back("missing 'vars'");
    if (sc.field_components.empty()) violations.push_back("missing 'field'");
    if (!sc.variables.empty() && !sc.field_components.empty() &&
        sc.field_components.size() != sc.variables.size())
        violations.push_back("field has " + std::to_string(sc.field_components.size()) +
                             " components but there are " + std::to_string(sc.variables.size()) +
                             " variables");
    if (!sc.automorphism.empty() && sc.automorphism.size() != sc.variables.size())
        violations.push_back("automorphism component count mismatch");
    if (!sc.automorphism_inverse.empty() &&
        sc.automorphism_inverse.size() != sc.variables.size())
        violations.push_back("automorphism inverse component count mismatch");
    if (!sc.automorphism_inverse.empty() && sc.automorphism.empty())
        violations.push_back("auto_inv given without auto");

    // everything below needs parseable expressions
    if (violations.empty()) {
        auto try_parse = [&](const std::vector<std::string>& exprs, const std::string& what) {
            for (const auto& e : exprs) {
                try {
                    parse_expression(e, sc.variables);
                } catch (const Error& err) {
                    violations.push_back(what + " '" + e + "': " + err.what());
                }
            }
        };
        try_parse(sc.field_components, "field component");
        try_parse(sc.curves, "curve");
        try_parse(sc.automorphism, "automorphism component");
        try_parse(sc.automorphism_inverse, "automorphism inverse component");
    }
    if (violations.empty() && !sc.automorphism.empty() && !sc.automorphism_inverse.empty()) {
        std::vector<MPoly> fwd = sc.parsed_automorphism();
        std::vector<MPoly> inv = sc.parsed_automorphism_inverse();
        for (size_t i = 0; i < fwd.size(); ++i) {
            MPoly comp = fwd[i].subst(inv);
            if (comp != MPoly::variable(sc.variables, i)) {
                violations.push_back("automorphism inverse does not compose to the identity in "
                                     "component " + std::to_string(i));
                break;
            }
        }
    }
    if (!violations.empty()) throw ValidationError(violations);
    return sc;
}

SourceCase load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open case file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_case_text(buf.str(), path);
}

} // namespace folkit
