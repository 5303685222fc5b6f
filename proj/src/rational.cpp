#include "superlocal/rational.hpp"

#include <cctype>

#include "superlocal/errors.hpp"

namespace superlocal {

BigInt ceil(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quot = num / den;  // truncates toward zero
    if (quot * den < num) ++quot;
    return quot;
}

std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
    auto digits = [&](std::string_view s, std::size_t base_offset) {
        if (s.empty()) throw ParseError("expected digits", base_offset);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected digit", base_offset + i);
        return BigInt(std::string(s));
    };

    bool negative = !text.empty() && text.front() == '-';
    std::size_t start = negative ? 1 : 0;
    std::string_view body = text.substr(start);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt den = digits(body.substr(slash + 1), start + slash + 1);
        if (den == 0) throw ParseError("zero denominator", start + slash + 1);
        value = Rational(digits(body.substr(0, slash), start), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view frac = body.substr(dot + 1);
        BigInt whole = dot == 0 ? BigInt(0) : digits(body.substr(0, dot), start);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(whole) + Rational(digits(frac, start + dot + 1), scale);
    } else {
        value = Rational(digits(body, start));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace superlocal
