#include "rslab/gaussian.hpp"

namespace rslab {

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    const Rational abs_im = im < Rational(0) ? -im : im;
    return re.str() + (im < Rational(0) ? "-" : "+") + abs_im.str() + "*i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
    auto bad = [&] { throw ParseError("malformed gaussian literal '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    // Split off an optional trailing "<sign>r/t*i". The real part carries its own
    // sign at position 0, so scan for a sign after the first character.
    if (text.size() >= 2 && text.substr(text.size() - 2) == "*i") {
        std::string_view body = text.substr(0, text.size() - 2);
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 1; i < body.size(); ++i) {
            if (body[i] == '+' || body[i] == '-') split = i;
        }
        if (split == std::string_view::npos) bad();
        Rational re_part = Rational::parse(body.substr(0, split));
        Rational im_mag = Rational::parse(body.substr(split + 1));
        Rational im_part = body[split] == '-' ? -im_mag : im_mag;
        return {std::move(re_part), std::move(im_part)};
    }
    return {Rational::parse(text), Rational(0)};
}

bool chain_equiv(const GaussianRational& a, const GaussianRational& b) {
    return a.im == b.im && (a.re - b.re).is_even_integer();
}

bool chain_covers(const GaussianRational& a, const GaussianRational& z) {
    return a.im == z.im && (a.re - z.re).is_nonnegative_even_integer();
}

GaussianRational chain_key(const GaussianRational& a) {
    return {a.re.mod2(), a.im};
}

}  // namespace rslab
