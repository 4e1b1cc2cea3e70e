#include "etaq/parser.hpp"

#include <cctype>
#include <set>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

enum class Tok {
    Ident,
    Integer,
    String,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Assign, // =
    EqEq,   // ==
    Newline,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Integer: return "integer";
    case Tok::String: return "string";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "'='";
    case Tok::EqEq: return "'=='";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int c) {
        out.push_back({k, std::move(t), line, c});
    };
    while (i < text.size()) {
        char c = text[i];
        int start_col = col;
        if (c == '\n') {
            push(Tok::Newline, "\n", start_col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == '#') { // comment to end of line
            while (i < text.size() && text[i] != '\n')
                ++i, ++col;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i];
                ++i;
                ++col;
            }
            push(Tok::Integer, std::move(num), start_col);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) ||
                    text[i] == '_')) {
                id += text[i];
                ++i;
                ++col;
            }
            push(Tok::Ident, std::move(id), start_col);
            continue;
        }
        if (c == '"') {
            std::string s;
            ++i;
            ++col;
            while (i < text.size() && text[i] != '"' && text[i] != '\n') {
                s += text[i];
                ++i;
                ++col;
            }
            if (i >= text.size() || text[i] != '"')
                throw ParseError("unterminated string literal", line, start_col);
            ++i;
            ++col;
            push(Tok::String, std::move(s), start_col);
            continue;
        }
        switch (c) {
        case '+': push(Tok::Plus, "+", start_col); break;
        case '-': push(Tok::Minus, "-", start_col); break;
        case '*': push(Tok::Star, "*", start_col); break;
        case '/': push(Tok::Slash, "/", start_col); break;
        case '^': push(Tok::Caret, "^", start_col); break;
        case '(': push(Tok::LParen, "(", start_col); break;
        case ')': push(Tok::RParen, ")", start_col); break;
        case '[': push(Tok::LBracket, "[", start_col); break;
        case ']': push(Tok::RBracket, "]", start_col); break;
        case ',': push(Tok::Comma, ",", start_col); break;
        case ':': push(Tok::Colon, ":", start_col); break;
        case '=':
            if (i + 1 < text.size() && text[i + 1] == '=') {
                push(Tok::EqEq, "==", start_col);
                ++i;
                ++col;
            } else {
                push(Tok::Assign, "=", start_col);
            }
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line, start_col);
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// identifiers of the shape f<digits> denote eta factors
bool is_eta_ident(const std::string& s, long& m) {
    if (s.size() < 2 || s[0] != 'f')
        return false;
    long v = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
        v = v * 10 + (s[i] - '0');
        if (v > 1000000)
            return false;
    }
    m = v;
    return v >= 1;
}

class Parser {
  public:
    Parser(const std::string& text, bool resolve_against_catalog_only)
        : toks_(lex(text)), expr_mode_(resolve_against_catalog_only) {}

    ClaimFile parse_file() {
        ClaimFile file;
        while (true) {
            skip_newlines();
            if (at(Tok::End))
                break;
            file.statements.push_back(parse_statement());
        }
        return file;
    }

    ExprPtr parse_single_expr() {
        skip_newlines();
        ExprPtr e = parse_expr();
        skip_newlines();
        expect(Tok::End);
        return e;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool expr_mode_;
    std::set<std::string> defined_;
    std::set<std::string> labels_;

    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_ident(const char* word) const {
        return at(Tok::Ident) && cur().text == word;
    }
    Token advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (got " + tok_name(cur().kind) +
                             (cur().text.empty() || cur().kind == Tok::Newline
                                  ? std::string()
                                  : " '" + cur().text + "'") +
                             ")",
                         cur().line, cur().col);
    }

    Token expect(Tok k, const char* what = nullptr) {
        if (!at(k))
            fail(std::string("expected ") + (what ? what : tok_name(k)));
        return advance();
    }

    void skip_newlines() {
        while (at(Tok::Newline))
            advance();
    }

    void end_statement() {
        if (!at(Tok::Newline) && !at(Tok::End))
            fail("expected end of statement");
    }

    long expect_long(const char* what) {
        Token t = expect(Tok::Integer, what);
        try {
            return std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + " out of range", t.line, t.col);
        }
    }

    Statement parse_statement() {
        if (!at(Tok::Ident))
            fail("expected 'series', 'identity', 'congruence' or 'internal'");
        const std::string& kw = cur().text;
        if (kw == "series")
            return parse_series_def();
        if (kw == "identity")
            return parse_identity();
        if (kw == "congruence")
            return parse_congruence();
        if (kw == "internal")
            return parse_internal();
        fail("expected 'series', 'identity', 'congruence' or 'internal'");
    }

    Statement parse_series_def() {
        advance(); // series
        Token name = expect(Tok::Ident, "series name");
        long m;
        if (is_eta_ident(name.text, m) || name.text == "q" ||
            name.text == "n" || name.text == "extract" ||
            name.text == "huff" || name.text == "subst" || name.text == "mod")
            throw ParseError("'" + name.text + "' is reserved", name.line,
                             name.col);
        if (SeriesCatalog::is_builtin(name.text))
            throw ParseError("cannot redefine builtin series " + name.text,
                             name.line, name.col);
        if (defined_.count(name.text))
            throw ParseError("series " + name.text + " is already defined",
                             name.line, name.col);
        expect(Tok::Assign);
        ExprPtr e = parse_expr();
        end_statement();
        defined_.insert(name.text);
        return SeriesDef{name.text, std::move(e)};
    }

    std::string parse_label(const char* kind) {
        Token label = expect(Tok::String, "claim label");
        if (!labels_.insert(label.text).second)
            throw ParseError("duplicate label \"" + label.text + "\"",
                             label.line, label.col);
        expect(Tok::Colon);
        (void)kind;
        return label.text;
    }

    Statement parse_identity() {
        advance();
        std::string label = parse_label("identity");
        ExprPtr lhs = parse_expr();
        expect(Tok::EqEq);
        ExprPtr rhs = parse_expr();
        end_statement();
        return Claim{std::move(label), IdentityClaim{std::move(lhs), std::move(rhs)}};
    }

    std::string parse_series_name() {
        Token name = expect(Tok::Ident, "series name");
        if (!expr_mode_ && !defined_.count(name.text) &&
            !SeriesCatalog::is_builtin(name.text))
            throw UnknownNameError("unknown series " + name.text, name.line,
                                   name.col);
        return name.text;
    }

    Progression parse_progression(bool allow_minus_one) {
        Progression p;
        Token first = cur();
        if (at(Tok::Integer)) {
            p.step = expect_long("progression step");
            expect(Tok::Star);
            Token n = expect(Tok::Ident, "'n'");
            if (n.text != "n")
                throw ParseError("expected 'n'", n.line, n.col);
        } else if (at_ident("n")) {
            advance();
            p.step = 1;
        } else {
            fail("expected progression A*n+B");
        }
        if (at(Tok::Plus)) {
            advance();
            p.offset = expect_long("progression offset");
        } else if (at(Tok::Minus)) {
            advance();
            p.offset = -expect_long("progression offset");
        }
        if (p.step < 1)
            throw ParseError("progression step must be >= 1", first.line,
                             first.col);
        long min_offset = allow_minus_one ? -1 : 0;
        if (p.offset < min_offset)
            throw ParseError("progression offset must be >= " +
                                 std::to_string(min_offset),
                             first.line, first.col);
        return p;
    }

    Int parse_modulus() {
        Token mod = expect(Tok::Ident, "'mod'");
        if (mod.text != "mod")
            throw ParseError("expected 'mod'", mod.line, mod.col);
        Token m = expect(Tok::Integer, "modulus");
        Int value(m.text);
        if (value < 2)
            throw ParseError("modulus must be >= 2", m.line, m.col);
        return value;
    }

    Statement parse_congruence() {
        advance();
        std::string label = parse_label("congruence");
        Token name_tok = cur();
        std::string name = parse_series_name();
        expect(Tok::LBracket);
        Progression p = parse_progression(false);
        expect(Tok::RBracket);
        if (p.offset >= p.step)
            throw ParseError("congruence offset must satisfy 0 <= B < A",
                             name_tok.line, name_tok.col);
        expect(Tok::EqEq);
        Token zero = expect(Tok::Integer, "'0'");
        if (zero.text != "0")
            throw ParseError("vanishing congruence compares against 0",
                             zero.line, zero.col);
        Int m = parse_modulus();
        end_statement();
        return Claim{std::move(label), VanishingClaim{name, p, std::move(m)}};
    }

    Statement parse_internal() {
        advance();
        std::string label = parse_label("internal");
        std::string lname = parse_series_name();
        expect(Tok::LBracket);
        Progression lp = parse_progression(false);
        expect(Tok::RBracket);
        expect(Tok::EqEq);
        std::string rname = parse_series_name();
        expect(Tok::LBracket);
        Progression rp = parse_progression(true);
        expect(Tok::RBracket);
        Int m = parse_modulus();
        end_statement();
        return Claim{std::move(label),
                     InternalClaim{lname, lp, rname, rp, std::move(m)}};
    }

    // expr := ['-'] term (('+'|'-') term)*
    ExprPtr parse_expr() {
        ExprPtr lhs;
        if (at(Tok::Minus)) {
            advance();
            lhs = SeriesExpr::sub(SeriesExpr::number(0), parse_term());
        } else {
            lhs = parse_term();
        }
        while (at(Tok::Plus) || at(Tok::Minus)) {
            bool plus = at(Tok::Plus);
            advance();
            ExprPtr rhs = parse_term();
            lhs = plus ? SeriesExpr::add(std::move(lhs), std::move(rhs))
                       : SeriesExpr::sub(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    // term := factor (('*'|'/') factor)*
    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (at(Tok::Star) || at(Tok::Slash)) {
            bool star = at(Tok::Star);
            advance();
            ExprPtr rhs = parse_factor();
            lhs = star ? SeriesExpr::mul(std::move(lhs), std::move(rhs))
                       : SeriesExpr::div(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    long parse_signed_int(const char* what) {
        bool negate = false;
        if (at(Tok::Minus)) {
            advance();
            negate = true;
        }
        long v = expect_long(what);
        return negate ? -v : v;
    }

    // factor := atom ('^' int)?
    ExprPtr parse_factor() {
        ExprPtr atom = parse_atom();
        if (!at(Tok::Caret))
            return atom;
        advance();
        long e = parse_signed_int("exponent");
        if (atom->kind == SeriesExpr::Kind::QPower && atom->j == 1)
            return SeriesExpr::q(e); // q^j is its own node
        return SeriesExpr::pow_of(std::move(atom), e);
    }

    ExprPtr parse_func(const std::string& fn, int line, int col) {
        expect(Tok::LParen);
        ExprPtr arg = parse_expr();
        std::vector<long> params;
        while (at(Tok::Comma)) {
            advance();
            params.push_back(parse_signed_int("argument"));
        }
        expect(Tok::RParen);
        auto arity = [&](std::size_t want) {
            if (params.size() != want)
                throw ArityError(fn + " expects " + std::to_string(want + 1) +
                                     " arguments",
                                 line, col);
        };
        try {
            if (fn == "extract") {
                arity(2);
                return SeriesExpr::extract_of(std::move(arg), params[0],
                                              params[1]);
            }
            if (fn == "huff") {
                arity(1);
                return SeriesExpr::huff_of(std::move(arg), params[0]);
            }
            arity(1);
            return SeriesExpr::subst_of(std::move(arg), params[0]);
        } catch (const ResidueOutOfRangeError& e) {
            throw ParseError(e.what(), line, col);
        } catch (const Error& e) {
            throw ParseError(e.what(), line, col);
        }
    }

    ExprPtr parse_atom() {
        if (at(Tok::Integer)) {
            Token t = advance();
            return SeriesExpr::number(Int(t.text));
        }
        if (at(Tok::LParen)) {
            advance();
            ExprPtr e = parse_expr();
            expect(Tok::RParen);
            return e;
        }
        if (at(Tok::Ident)) {
            Token t = advance();
            long m;
            if (t.text == "q")
                return SeriesExpr::q(1);
            if (is_eta_ident(t.text, m))
                return SeriesExpr::eta(m);
            if (t.text == "extract" || t.text == "huff" || t.text == "subst")
                return parse_func(t.text, t.line, t.col);
            if (!expr_mode_ && !defined_.count(t.text) &&
                !SeriesCatalog::is_builtin(t.text))
                throw UnknownNameError("unknown name " + t.text, t.line, t.col);
            if (expr_mode_ && !SeriesCatalog::is_builtin(t.text))
                throw UnknownNameError("unknown name " + t.text, t.line, t.col);
            return SeriesExpr::ref(t.text);
        }
        fail("expected an expression atom");
    }
};

} // namespace

ClaimFile parse_claim_file(const std::string& text) {
    return Parser(text, false).parse_file();
}

ExprPtr parse_expr(const std::string& text) {
    return Parser(text, true).parse_single_expr();
}

} // namespace etaq
