#include "fmk/rational.hpp"

#include "fmk/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace fmk {

Int floor_int(const Rational& r) {
    Int n = num(r);
    Int d = den(r); // > 0 by normalization
    Int q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_int(r)); }

std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

namespace {

// Parses a plain decimal integer with no leading zeros. Returns false on any
// deviation instead of throwing so the caller can produce a better message.
bool parse_strict_int(const std::string& text, Int& out) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    if (i >= text.size()) return false;
    if (text[i] == '0' && text.size() > i + 1) return false; // leading zero
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    }
    out = Int(text.substr(i));
    if (negative) {
        if (out == 0) return false; // canonical zero is "0", not "-0"
        out = -out;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> ParseError {
        return ParseError("invalid rational literal '" + text +
                          "' (expected an integer or a reduced fraction \"p/q\" with q > 1)");
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        Int n;
        if (!parse_strict_int(text, n)) throw bad();
        return Rational(n);
    }
    if (text.find('/', slash + 1) != std::string::npos) throw bad();
    Int n, d;
    if (!parse_strict_int(text.substr(0, slash), n)) throw bad();
    if (!parse_strict_int(text.substr(slash + 1), d)) throw bad();
    if (d <= 1) throw bad(); // q == 1 must be written as a bare integer
    if (boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d) != 1) {
        throw ParseError("rational literal '" + text + "' is not in lowest terms");
    }
    Rational r(n);
    r /= d;
    return r;
}

} // namespace fmk
