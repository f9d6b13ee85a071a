#include "rslab/parser.hpp"

#include <cctype>

namespace rslab {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_trivia() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_trivia();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_trivia();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_eat(char c) {
        if (peek() != c || pos_ >= text_.size()) return false;
        advance();
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!try_eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    bool try_eat_word(std::string_view word) {
        skip_trivia();
        if (text_.substr(pos_).substr(0, word.size()) != word) return false;
        for (std::size_t i = 0; i < word.size(); ++i) advance();
        return true;
    }

    struct Mark {
        std::size_t pos;
        int line, column;
    };
    Mark mark() {
        skip_trivia();
        return {pos_, line_, column_};
    }

    SourceSpan span_from(const Mark& m) const {
        return {m.line, m.column, m.pos, line_, column_, pos_};
    }

    [[noreturn]] void fail(const std::string& message) {
        const Mark here = mark();
        advance_if_any();
        throw ParseError(message, span_from(here));
    }

    [[noreturn]] void fail_from(const Mark& m, const std::string& message) {
        throw ParseError(message, span_from(m));
    }

    // Raw digit run; empty result means the caller reports its own error.
    std::string_view digits() {
        skip_trivia();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        return text_.substr(start, pos_ - start);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
    void advance_if_any() {
        if (pos_ < text_.size()) advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

mpz_class parse_unsigned_integer(Cursor& cur, const std::string& what) {
    const std::string_view ds = cur.digits();
    if (ds.empty()) cur.fail("expected " + what);
    return mpz_class(std::string(ds), 10);
}

Rational parse_rational(Cursor& cur, bool allow_sign) {
    bool negative = false;
    if (allow_sign) {
        if (cur.try_eat('-'))
            negative = true;
        else
            cur.try_eat('+');
    }
    mpz_class num = parse_unsigned_integer(cur, "a rational literal");
    if (negative) num = -num;
    mpz_class den(1);
    if (cur.try_eat('/')) {
        const auto dm = cur.mark();
        den = parse_unsigned_integer(cur, "a denominator");
        if (sgn(den) == 0) cur.fail_from(dm, "denominator must be a positive integer");
    }
    return Rational(std::move(num), std::move(den));
}

GaussianRational parse_gauss(Cursor& cur) {
    if (cur.try_eat('(')) {
        Rational re = parse_rational(cur, /*allow_sign=*/true);
        Rational im(0);
        if (cur.peek() == '+' || cur.peek() == '-') {
            const bool negative = cur.peek() == '-';
            cur.try_eat(negative ? '-' : '+');
            Rational mag = parse_rational(cur, /*allow_sign=*/false);
            cur.expect('*', "before 'i' in the imaginary part");
            if (!cur.try_eat('i')) cur.fail("expected 'i' after '*'");
            im = negative ? -mag : mag;
        }
        cur.expect(')', "to close the exponent");
        return {std::move(re), std::move(im)};
    }
    return {parse_rational(cur, /*allow_sign=*/true), Rational(0)};
}

CharacterGL1 parse_character_body(Cursor& cur) {
    int eps = 0;
    if (cur.try_eat_word("sgn")) {
        cur.expect('^', "after 'sgn'");
        const auto m = cur.mark();
        const std::string_view ds = cur.digits();
        if (ds == "0")
            eps = 0;
        else if (ds == "1")
            eps = 1;
        else
            cur.fail_from(m, "sign exponent must be the literal 0 or 1");
        cur.expect('*', "after the sign factor");
    }
    if (!cur.try_eat_word("|.|")) cur.fail("expected '|.|'");
    cur.expect('^', "after '|.|'");
    return {eps, parse_gauss(cur)};
}

void expect_end(Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected trailing input");
}

}  // namespace

CharacterGL1 parse_character(std::string_view text) {
    Cursor cur(text);
    CharacterGL1 c = parse_character_body(cur);
    expect_end(cur);
    return c;
}

PrincipalSeries parse_principal_series(std::string_view text) {
    Cursor cur(text);
    if (!cur.try_eat_word("ps")) cur.fail("expected 'ps['");
    cur.expect('[', "after 'ps'");
    if (cur.peek() == ']') cur.fail("empty principal series");
    std::vector<CharacterGL1> chars;
    chars.push_back(parse_character_body(cur));
    while (cur.try_eat(',')) chars.push_back(parse_character_body(cur));
    cur.expect(']', "to close the series");
    expect_end(cur);
    return PrincipalSeries(std::move(chars));
}

std::string render(const CharacterGL1& c) {
    std::string out;
    if (c.eps() == 1) out += "sgn^1 * ";
    out += "|.|^(" + c.s().str() + ")";
    return out;
}

std::string render(const PrincipalSeries& p) {
    std::string out = "ps[";
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (i > 0) out += ", ";
        out += render(p.at(i));
    }
    out += "]";
    return out;
}

}  // namespace rslab
