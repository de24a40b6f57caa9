#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace walker {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Prints "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "p/q" or a plain decimal like "0.5". Throws on malformed input
// or a zero denominator.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rat(num, den);
        }
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::size_t frac = text.size() - dot - 1;
            if (frac == 0) throw std::invalid_argument("malformed rational");
            Int den = 1;
            for (std::size_t i = 0; i < frac; ++i) den *= 10;
            return Rat(Int(digits), den);
        }
        return Rat(Int(text));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

// floor(sqrt(r)) for r >= 0, computed with integer arithmetic only.
inline Int floor_sqrt(const Rat& r) {
    if (r < 0) throw std::invalid_argument("negative radicand");
    const Int num = numerator(r);
    const Int den = denominator(r);
    Int k = sqrt(Int(num / den));
    while ((k + 1) * (k + 1) * den <= num) ++k;
    while (k > 0 && k * k * den > num) --k;
    return k;
}

// Fixed-point decimal rendering (truncating), digit-exact and float-free.
inline std::string rat_to_fixed(const Rat& r, int digits = 3) {
    Rat v = r < 0 ? -r : r;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = numerator(v) * scale / denominator(v);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string f = frac.str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    std::string out = (r < 0 && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) out += "." + f;
    return out;
}

}  // namespace walker
