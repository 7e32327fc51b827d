#include "reconf/rational.hpp"

#include <cctype>
#include <ostream>

namespace reconf {

Rational Rational::parse(const std::string& text) {
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) -> long long {
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ArgumentError("invalid rational '" + text + "'");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    };
    const long long num = read_int(true);
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0)
            throw ArgumentError("invalid rational '" + text + "': zero denominator");
    }
    if (pos != text.size())
        throw ArgumentError("invalid rational '" + text + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace reconf
