#include "rslab/rational.hpp"

#include <cctype>

namespace rslab {

Rational::Rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational denominator must be nonzero");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw PreconditionError("rational denominator must be nonzero");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // Strict form: [+-]digits[/digits], no whitespace. Used inside JSON payloads
    // and by the gaussian literal parser; the DSL has its own tokenizer.
    auto bad = [&] { throw ParseError("malformed rational literal '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad();
    mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
    if (negative) num = -num;
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') bad();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) bad();
        den = mpz_class(std::string(text.substr(den_begin)), 10);
        if (sgn(den) == 0) throw ParseError("rational denominator must be nonzero in '" + std::string(text) + "'");
    }
    return Rational(std::move(num), std::move(den));
}

bool Rational::is_even_integer() const {
    return is_integer() && mpz_even_p(q_.get_num().get_mpz_t());
}

bool Rational::is_nonnegative_even_integer() const {
    return is_even_integer() && sgn(q_) >= 0;
}

Rational Rational::mod2() const {
    // r - 2*floor(r/2) lies in [0, 2).
    mpq_class half = q_ / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    return Rational(mpq_class(q_ - 2 * mpq_class(fl)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division of rationals by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_str();
}

}  // namespace rslab
