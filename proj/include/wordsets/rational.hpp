#ifndef WORDSETS_RATIONAL_HPP_
#define WORDSETS_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordsets {

/// Exact probabilities, priors and scores are kept as 64-bit rationals;
/// decimals appear only when rendering.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

/// Floor of a rational (towards negative infinity).
inline std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t ceil_of(const Rational& r) {
    return -floor_of(-r);
}

/// Round half away from zero.
inline std::int64_t round_half_away(const Rational& r) {
    if (r < 0) return -round_half_away(-r);
    return floor_of(r + Rational(1, 2));
}

/// Renders `r` with exactly `places` decimals, rounding half away from zero
/// on the exact value (so 106.0872727... becomes "106.09").
inline std::string to_fixed(const Rational& r, int places) {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = r < 0;
    const std::int64_t scaled = round_half_away((negative ? -r : r) * scale);
    std::string digits = std::to_string(scaled);
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative && scaled != 0) digits.insert(0, "-");
    return digits;
}

/// Parses "0.35", "35%", "7/20" or "1" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();

    bool percent = false;
    if (text.back() == '%') {
        percent = true;
        text.remove_suffix(1);
    }

    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty() || s.size() > 15) fail();
        std::int64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_int(text.substr(slash + 1));
        if (den == 0) fail();
        value = Rational(parse_int(text.substr(0, slash)), den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(whole.empty() ? 0 : parse_int(whole)) +
                Rational(frac.empty() ? 0 : parse_int(frac), scale);
    } else {
        value = Rational(parse_int(text));
    }
    return percent ? value / 100 : value;
}

/// "25/69" (or "1" for integers); inverse of parse_rational.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace wordsets

#endif  // WORDSETS_RATIONAL_HPP_
