#include "wasp/rational.hpp"

#include "wasp/error.hpp"

#include <cctype>
#include <cstdlib>

namespace wasp {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer pow10(std::size_t k) {
    Integer r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= 10;
    return r;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    Rational magnitude;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + text + "'");
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        magnitude = Rational(Integer(num), d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw ParseError("malformed number '" + text + "'");
            magnitude = Rational(Integer(s));
        } else {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole.empty() && frac.empty())
                throw ParseError("malformed number '" + text + "'");
            if (!whole.empty() && !all_digits(whole))
                throw ParseError("malformed number '" + text + "'");
            if (!frac.empty() && !all_digits(frac))
                throw ParseError("malformed number '" + text + "'");
            Integer w = whole.empty() ? Integer(0) : Integer(whole);
            Integer f = frac.empty() ? Integer(0) : Integer(frac);
            Integer scale = pow10(frac.size());
            magnitude = Rational(w * scale + f, scale);
        }
    }
    return negative ? Rational(-magnitude) : magnitude;
}

std::string to_fraction_string(const Rational& value) {
    std::string num = numerator(value).str();
    if (denominator(value) == 1) return num;
    return num + "/" + denominator(value).str();
}

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    Integer scale = pow10(static_cast<std::size_t>(digits));
    Rational scaled = value * scale;
    Integer n = numerator(scaled), d = denominator(scaled);
    bool negative = n < 0;
    if (negative) n = -n;
    // Round half away from zero.
    Integer q = (2 * n + d) / (2 * d);
    std::string body = q.str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    std::string out;
    if (negative && q != 0) out += '-';
    out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        std::string frac = body.substr(body.size() - static_cast<std::size_t>(digits));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

double to_double(const Rational& value) {
    return static_cast<double>(value);
}

} // namespace wasp
