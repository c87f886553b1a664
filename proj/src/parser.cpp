#include "grhopf/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace grhopf {

namespace {

enum class Tok { ident, number, tensor, lparen, rparen, comma, caret, equals, plus, minus, slash, end };

struct Token {
    Tok kind;
    std::string text;
    long value = 0;
    int col = 0;
};

struct LineLexer {
    const std::string& line;
    int lineno;
    size_t pos = 0;

    LineLexer(const std::string& l, int n) : line(l), lineno(n) {}

    [[noreturn]] void fail(int col, const std::string& msg) const {
        throw input_error("line " + std::to_string(lineno) + ", col " +
                          std::to_string(col) + ": " + msg);
    }

    Token next() {
        while (pos < line.size() && std::isspace(unsigned(line[pos]))) ++pos;
        int col = int(pos) + 1;
        if (pos >= line.size() || line[pos] == '#') return {Tok::end, "", 0, col};
        if (line.compare(pos, 3, "(x)") == 0) {
            pos += 3;
            return {Tok::tensor, "(x)", 0, col};
        }
        char c = line[pos];
        switch (c) {
            case '(': ++pos; return {Tok::lparen, "(", 0, col};
            case ')': ++pos; return {Tok::rparen, ")", 0, col};
            case ',': ++pos; return {Tok::comma, ",", 0, col};
            case '^': ++pos; return {Tok::caret, "^", 0, col};
            case '=': ++pos; return {Tok::equals, "=", 0, col};
            case '+': ++pos; return {Tok::plus, "+", 0, col};
            case '-': ++pos; return {Tok::minus, "-", 0, col};
            case '/': ++pos; return {Tok::slash, "/", 0, col};
            default: break;
        }
        if (std::isdigit(unsigned(c))) {
            size_t start = pos;
            while (pos < line.size() && std::isdigit(unsigned(line[pos]))) ++pos;
            std::string t = line.substr(start, pos - start);
            if (t.size() > 18) fail(col, "integer literal too large");
            return {Tok::number, t, std::stol(t), col};
        }
        if (std::isalpha(unsigned(c)) || c == '_') {
            size_t start = pos;
            while (pos < line.size() &&
                   (std::isalnum(unsigned(line[pos])) || line[pos] == '_'))
                ++pos;
            return {Tok::ident, line.substr(start, pos - start), 0, col};
        }
        fail(col, std::string("unexpected character '") + c + "'");
    }
};

struct LineParser {
    LineLexer lex;
    Token cur;

    LineParser(const std::string& line, int lineno) : lex(line, lineno) { cur = lex.next(); }

    [[noreturn]] void fail(const std::string& msg) const { lex.fail(cur.col, msg); }

    void advance() { cur = lex.next(); }

    bool at(Tok k) const { return cur.kind == k; }

    Token expect(Tok k, const std::string& what) {
        if (cur.kind != k) fail("expected " + what);
        Token t = cur;
        advance();
        return t;
    }

    void expect_end() {
        if (cur.kind != Tok::end) fail("trailing input");
    }

    long expect_int(const std::string& what) { return expect(Tok::number, what).value; }

    // scalar: [-] int [/ int]
    FElem scalar(const Field& f) {
        bool negative = false;
        if (at(Tok::minus)) {
            negative = true;
            advance();
        }
        long num = expect_int("a number");
        long den = 1;
        if (at(Tok::slash)) {
            advance();
            den = expect_int("a denominator");
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        if (negative) r = -r;
        return f.from_rational(r);
    }

    bool starts_monomial() const {
        return at(Tok::ident) || at(Tok::number) || at(Tok::minus);
    }

    // monomial: [scalar] (ident [^int])*; a bare scalar is allowed
    PolyTerm monomial(const Presentation& p) {
        const Field& f = *p.field;
        PolyTerm term;
        term.coeff = f.one();
        term.exps.assign(p.generators.size(), 0);
        bool any = false;
        if (at(Tok::number) || at(Tok::minus)) {
            term.coeff = scalar(f);
            any = true;
        }
        while (at(Tok::ident)) {
            int g = p.gen_index(cur.text);
            if (g < 0) fail("unknown generator '" + cur.text + "'");
            advance();
            long e = 1;
            if (at(Tok::caret)) {
                advance();
                e = expect_int("an exponent");
                if (e < 0) fail("negative exponent");
            }
            term.exps[g] += int(e);
            any = true;
        }
        if (!any) fail("expected a monomial");
        return term;
    }

    // polynomial: monomial (('+'|'-') monomial)*
    GenPoly polynomial(const Presentation& p) {
        const Field& f = *p.field;
        GenPoly poly;
        bool negate = false;
        while (true) {
            PolyTerm t = monomial(p);
            if (negate) t.coeff = f.neg(t.coeff);
            if (!f.is_zero(t.coeff)) poly.push_back(t);
            if (at(Tok::plus)) {
                negate = false;
                advance();
            } else if (at(Tok::minus)) {
                negate = true;
                advance();
            } else {
                break;
            }
        }
        return poly;
    }

    TensorPoly tensor_polynomial(const Presentation& p) {
        const Field& f = *p.field;
        TensorPoly poly;
        bool negate = false;
        while (true) {
            PolyTerm left = monomial(p);
            expect(Tok::tensor, "'(x)'");
            PolyTerm right = monomial(p);
            TensorTerm t;
            t.coeff = f.mul(left.coeff, right.coeff);
            if (negate) t.coeff = f.neg(t.coeff);
            t.left = left.exps;
            t.right = right.exps;
            if (!f.is_zero(t.coeff)) poly.push_back(t);
            if (at(Tok::plus)) {
                negate = false;
                advance();
            } else if (at(Tok::minus)) {
                negate = true;
                advance();
            } else {
                break;
            }
        }
        return poly;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool have_algebra = false;
    std::vector<bool> has_comul, has_rel, has_counit, has_antipode;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineParser lp(line, lineno);
        if (lp.at(Tok::end)) continue;
        Token head = lp.expect(Tok::ident, "a directive");
        const std::string& kw = head.text;

        if (kw == "algebra") {
            if (have_algebra) lp.fail("duplicate algebra line");
            Token name = lp.expect(Tok::ident, "an algebra name");
            Token over = lp.expect(Tok::ident, "'over'");
            if (over.text != "over") lp.fail("expected 'over'");
            Token fld = lp.expect(Tok::ident, "a field (GF(p[,n]) or QQ)");
            if (fld.text == "QQ") {
                p.field = Field::rationals();
            } else if (fld.text == "GF") {
                lp.expect(Tok::lparen, "'('");
                long chr = lp.expect_int("a characteristic");
                int ext = 1;
                if (lp.at(Tok::comma)) {
                    lp.advance();
                    ext = int(lp.expect_int("an extension degree"));
                }
                lp.expect(Tok::rparen, "')'");
                p.field = Field::gf(chr, ext);
            } else {
                lp.fail("unknown field '" + fld.text + "'");
            }
            p.name = name.text;
            have_algebra = true;
            lp.expect_end();
            continue;
        }
        if (!have_algebra) lp.fail("the file must start with an algebra line");

        if (kw == "truncate") {
            long d = lp.expect_int("a truncation degree");
            if (d < 0) lp.fail("negative truncation degree");
            p.truncation = int(d);
            lp.expect_end();
        } else if (kw == "gen") {
            Token name = lp.expect(Tok::ident, "a generator name");
            if (p.gen_index(name.text) >= 0) lp.fail("duplicate generator " + name.text);
            Token degkw = lp.expect(Tok::ident, "'deg'");
            if (degkw.text != "deg") lp.fail("expected 'deg'");
            long d = lp.expect_int("a degree");
            if (d < 0) lp.fail("negative degree");
            p.generators.push_back({name.text, int(d)});
            p.relations.push_back(std::nullopt);
            p.comul.emplace_back();
            p.counit.push_back(p.field->zero());
            p.antipode.emplace_back();
            has_comul.push_back(false);
            has_rel.push_back(false);
            has_counit.push_back(false);
            has_antipode.push_back(false);
            lp.expect_end();
        } else if (kw == "rel") {
            Token name = lp.expect(Tok::ident, "a generator name");
            int g = p.gen_index(name.text);
            if (g < 0) lp.fail("unknown generator '" + name.text + "'");
            if (has_rel[g]) lp.fail("duplicate relation for " + name.text);
            lp.expect(Tok::caret, "'^'");
            long e = lp.expect_int("an exponent");
            if (e < 2) lp.fail("relation exponent must be at least 2");
            lp.expect(Tok::equals, "'='");
            GenPoly rhs = lp.polynomial(p);
            for (const auto& t : rhs)
                for (size_t gg = 0; gg < t.exps.size(); ++gg)
                    if (t.exps[gg] != 0 && int(gg) != g)
                        lp.fail("relation for " + name.text +
                                " must be a polynomial in " + name.text + " only");
            p.relations[g] = Relation{g, int(e), rhs};
            has_rel[g] = true;
            lp.expect_end();
        } else if (kw == "counit") {
            Token name = lp.expect(Tok::ident, "a generator name");
            int g = p.gen_index(name.text);
            if (g < 0) lp.fail("unknown generator '" + name.text + "'");
            lp.expect(Tok::equals, "'='");
            p.counit[g] = lp.scalar(*p.field);
            has_counit[g] = true;
            p.has_coalgebra = true;
            lp.expect_end();
        } else if (kw == "comul") {
            Token name = lp.expect(Tok::ident, "a generator name");
            int g = p.gen_index(name.text);
            if (g < 0) lp.fail("unknown generator '" + name.text + "'");
            if (has_comul[g]) lp.fail("duplicate comul for " + name.text);
            lp.expect(Tok::equals, "'='");
            p.comul[g] = lp.tensor_polynomial(p);
            has_comul[g] = true;
            p.has_coalgebra = true;
            lp.expect_end();
        } else if (kw == "antipode") {
            Token name = lp.expect(Tok::ident, "a generator name");
            int g = p.gen_index(name.text);
            if (g < 0) lp.fail("unknown generator '" + name.text + "'");
            lp.expect(Tok::equals, "'='");
            p.antipode[g] = lp.polynomial(p);
            has_antipode[g] = true;
            p.has_antipode = true;
            lp.expect_end();
        } else {
            lp.fail("unknown directive '" + kw + "'");
        }
    }

    if (!have_algebra) throw input_error("line 1, col 1: missing algebra line");
    if (p.has_coalgebra) {
        for (size_t g = 0; g < p.generators.size(); ++g)
            if (!has_comul[g])
                throw input_error("generator " + p.generators[g].name +
                                  " has coalgebra data missing (no comul line)");
    }
    if (p.has_antipode) {
        for (size_t g = 0; g < p.generators.size(); ++g)
            if (!has_antipode[g])
                throw input_error("generator " + p.generators[g].name +
                                  " has no antipode line while others do");
    }
    return p;
}

namespace {

std::string scalar_str(const Field& f, const FElem& c) { return f.str(c); }

std::string monomial_str(const Presentation& p, const FElem& coeff,
                         const std::vector<int>& exps) {
    const Field& f = *p.field;
    std::ostringstream os;
    bool any_gen = false;
    for (size_t g = 0; g < exps.size(); ++g)
        if (exps[g] > 0) any_gen = true;
    if (!any_gen) return scalar_str(f, coeff);
    bool coeff_is_one = f.is_one(coeff);
    bool first = true;
    if (!coeff_is_one) {
        os << scalar_str(f, coeff);
        first = false;
    }
    for (size_t g = 0; g < exps.size(); ++g) {
        if (exps[g] == 0) continue;
        if (!first) os << " ";
        os << p.generators[g].name;
        if (exps[g] > 1) os << "^" << exps[g];
        first = false;
    }
    return os.str();
}

std::string poly_str(const Presentation& p, const GenPoly& poly) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) os << " + ";
        os << monomial_str(p, poly[i].coeff, poly[i].exps);
    }
    return os.str();
}

}  // namespace

std::string print_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "algebra " << p.name << " over " << p.field->spec().str() << "\n";
    if (p.truncation) os << "truncate " << *p.truncation << "\n";
    for (const auto& g : p.generators) os << "gen " << g.name << " deg " << g.degree << "\n";
    for (size_t g = 0; g < p.generators.size(); ++g) {
        if (!p.relations[g]) continue;
        os << "rel " << p.generators[g].name << "^" << p.relations[g]->exponent << " = "
           << poly_str(p, p.relations[g]->rhs) << "\n";
    }
    if (p.has_coalgebra) {
        for (size_t g = 0; g < p.generators.size(); ++g)
            os << "counit " << p.generators[g].name << " = "
               << scalar_str(*p.field, p.counit[g]) << "\n";
        for (size_t g = 0; g < p.generators.size(); ++g) {
            os << "comul " << p.generators[g].name << " = ";
            if (p.comul[g].empty()) {
                os << "0 (x) 0";
            } else {
                for (size_t i = 0; i < p.comul[g].size(); ++i) {
                    if (i) os << " + ";
                    const TensorTerm& t = p.comul[g][i];
                    os << monomial_str(p, t.coeff, t.left) << " (x) "
                       << monomial_str(p, p.field->one(), t.right);
                }
            }
            os << "\n";
        }
    }
    if (p.has_antipode) {
        for (size_t g = 0; g < p.generators.size(); ++g)
            os << "antipode " << p.generators[g].name << " = "
               << poly_str(p, p.antipode[g]) << "\n";
    }
    return os.str();
}

}  // namespace grhopf
