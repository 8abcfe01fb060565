#include "qgkit/expr.hpp"

#include <cctype>
#include <sstream>

namespace qgkit {

namespace {

enum class Tok { number, ident, q, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::end, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        switch (c) {
        case '+': single(Tok::plus); return;
        case '-': single(Tok::minus); return;
        case '*': single(Tok::star); return;
        case '/': single(Tok::slash); return;
        case '^': single(Tok::caret); return;
        case '(': single(Tok::lparen); return;
        case ')': single(Tok::rparen); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Tok::number, text_.substr(start, pos_ - start), tok_.line, tok_.column};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            std::string name = text_.substr(start, pos_ - start);
            tok_ = {name == "q" ? Tok::q : Tok::ident, std::move(name), tok_.line, tok_.column};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }
};

class Parser {
public:
    Parser(const std::string& text, const GeneratorTable* table, RootOrder order)
        : lex_(text), table_(table), order_(order) {}

    NcPoly parse() {
        NcPoly p = expr();
        expect(Tok::end, "end of input");
        return p;
    }

private:
    Lexer lex_;
    const GeneratorTable* table_;
    RootOrder order_;

    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw parse_error(msg, t.line, t.column);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind)
            fail("expected " + what, lex_.peek());
        return lex_.take();
    }

    NcPoly expr() {
        NcPoly acc = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Tok op = lex_.take().kind;
            NcPoly rhs = term();
            acc = op == Tok::plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Tok::slash) {
                Token t = lex_.take();
                NcPoly d = factor();
                if (d.is_zero())
                    fail("division by zero", t);
                if (d.degree() > 0)
                    fail("divisor must be a scalar", t);
                acc = acc.scaled(d.terms().begin()->second.inv());
            } else if (k == Tok::ident || k == Tok::q || k == Tok::number ||
                       k == Tok::lparen) {
                fail("missing '*' between factors", lex_.peek());
            } else {
                break;
            }
        }
        return acc;
    }

    NcPoly factor() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return -factor();
        }
        return primary();
    }

    Rational exponent() {
        expect(Tok::lparen, "'(' after '^'");
        bool neg = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            neg = true;
        }
        Token num = expect(Tok::number, "exponent numerator");
        Rational e(num.text);
        if (lex_.peek().kind == Tok::slash) {
            lex_.take();
            Token den = expect(Tok::number, "exponent denominator");
            if (den.text == "0")
                fail("zero exponent denominator", den);
            e = Rational(num.text + "/" + den.text);
        }
        e.canonicalize();
        expect(Tok::rparen, "')' closing the exponent");
        return neg ? Rational(-e) : e;
    }

    NcPoly primary() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::number: {
            lex_.take();
            return NcPoly::scalar(Scalar::rational(Rational(t.text), order_));
        }
        case Tok::q: {
            lex_.take();
            Rational e = 1;
            if (lex_.peek().kind == Tok::caret) {
                lex_.take();
                e = exponent();
            }
            try {
                return NcPoly::scalar(Scalar::q_power(e, order_));
            } catch (const config_error& err) {
                fail(err.what(), t);
            }
        }
        case Tok::ident: {
            lex_.take();
            if (!table_)
                fail("generators are not allowed here", t);
            auto id = table_->find(t.text);
            if (!id)
                fail("unknown generator '" + t.text + "'", t);
            return NcPoly(Word{*id}, Scalar::from_int(1, order_));
        }
        case Tok::lparen: {
            lex_.take();
            NcPoly p = expr();
            expect(Tok::rparen, "')'");
            return p;
        }
        default:
            fail("expected a number, generator, 'q' or '('", t);
        }
    }
};

} // namespace

NcPoly parse_expression(const std::string& text, const GeneratorTable& table,
                        RootOrder order) {
    return Parser(text, &table, order).parse();
}

Scalar parse_scalar(const std::string& text, RootOrder order) {
    NcPoly p = Parser(text, nullptr, order).parse();
    if (p.is_zero())
        return Scalar(order);
    if (p.degree() > 0)
        throw input_error("expected a scalar expression");
    return p.terms().begin()->second;
}

Rational parse_rational_literal(const std::string& text) {
    size_t pos = 0;
    bool neg = false;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw input_error("bad rational '" + text + "'");
    std::string num = text.substr(start, pos - start);
    std::string den = "1";
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw input_error("bad rational '" + text + "'");
        den = text.substr(start, pos - start);
    }
    skip_ws();
    if (pos != text.size())
        throw input_error("bad rational '" + text + "'");
    Rational r(num + "/" + den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

RelationSet parse_relation_file(const std::string& text, const GeneratorTable& table,
                                RootOrder order) {
    RelationSet out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (blank)
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("missing ':' in relation line", lineno, 1);
        auto eq = line.find('=', colon);
        if (eq == std::string::npos)
            throw parse_error("missing '=' in relation line", lineno, 1);
        std::string name = line.substr(0, colon);
        // trim
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        name = trim(name);
        if (name.empty())
            throw parse_error("empty relation name", lineno, 1);
        NcPoly lhs = parse_expression(line.substr(colon + 1, eq - colon - 1), table, order);
        NcPoly rhs = parse_expression(line.substr(eq + 1), table, order);
        out.add(name, lhs - rhs, "file:" + std::to_string(lineno));
    }
    return out;
}

std::string print_ncpoly(const NcPoly& p, const GeneratorTable& table) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    // leading (deglex-greatest) term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
        bool negated = false;
        // pull a leading '-' out of single-monomial numerators
        if (c.num().coeffs().size() == 1 && c.num().coeffs().begin()->second < 0) {
            negated = true;
            c = -c;
        }
        if (first) {
            if (negated)
                out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        std::string cs = print_scalar(c);
        bool simple = c.is_polynomial() && c.num().coeffs().size() == 1;
        if (w.empty()) {
            out << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (c.is_one()) {
            out << table.word_str(w);
        } else {
            out << (simple ? cs : "(" + cs + ")") << "*" << table.word_str(w);
        }
    }
    return out.str();
}

} // namespace qgkit
