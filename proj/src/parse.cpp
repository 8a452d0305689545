#include "hkade/parse.hpp"

#include <cctype>
#include <sstream>

namespace hkade {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& names;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("ParseError", what + " at position " + std::to_string(pos) +
                                             " in '" + s + "'");
    }

    int nvars() const { return static_cast<int>(names.size()); }

    unsigned long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoul(s.substr(start, pos - start));
    }

    // expr := term (('+'|'-') term)*
    Poly<GaussInt> expr() {
        Poly<GaussInt> acc(nvars());
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Poly<GaussInt> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    // term := factor ('*' factor)*
    Poly<GaussInt> term() {
        Poly<GaussInt> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    // factor := atom ('^' INT)?
    Poly<GaussInt> factor() {
        Poly<GaussInt> a = atom();
        if (eat('^')) a = a.pow(integer());
        return a;
    }

    Poly<GaussInt> atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly<GaussInt> inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly<GaussInt>::constant(nvars(), GaussInt(Int(integer())));
        // longest variable-name match, then the bare imaginary unit
        size_t best = 0;
        int idx = -1;
        for (int v = 0; v < nvars(); ++v) {
            const std::string& nm = names[v];
            if (nm.size() > best && s.compare(pos, nm.size(), nm) == 0) {
                best = nm.size();
                idx = v;
            }
        }
        if (idx >= 0) {
            pos += best;
            return Poly<GaussInt>::variable(nvars(), idx, 1, GaussInt(Int(1)));
        }
        if (c == 'i') {
            ++pos;
            return Poly<GaussInt>::constant(nvars(), GaussInt::unit_i());
        }
        fail("unknown symbol");
    }
};

std::string monomial_str(const Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

Poly<GaussInt> parse_poly(const std::string& text, const std::vector<std::string>& names) {
    Parser p{text, 0, names};
    Poly<GaussInt> r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::vector<Poly<GaussInt>> parse_poly_list(const std::string& text,
                                            const std::vector<std::string>& names) {
    std::vector<Poly<GaussInt>> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(parse_poly(text.substr(start, i - start), names));
            start = i + 1;
        }
    }
    return out;
}

std::string poly_str(const Poly<GaussInt>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        GaussInt k = c;
        std::string sign = "+";
        if (k.im == 0 && k.re < 0) {
            sign = "-";
            k = -k;
        }
        if (!first || sign == "-") out << (first ? (sign == "-" ? "-" : "") : sign);
        first = false;
        std::string mono = monomial_str(e, names);
        bool unit_coeff = (k.re == 1 && k.im == 0);
        if (unit_coeff && mono.empty()) out << "1";
        else if (unit_coeff) out << mono;
        else {
            bool mixed = (k.re != 0 && k.im != 0);
            if (mixed) out << "(" << k.str() << ")";
            else out << k.str();
            if (!mono.empty()) out << "*" << mono;
        }
    }
    return out.str();
}

std::string poly_str(const Poly<Int>& p, const std::vector<std::string>& names) {
    return poly_str(to_gauss(p), names);
}

} // namespace hkade
