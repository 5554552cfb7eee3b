#include "liecoh/rational.hpp"

#include <cctype>
#include <ostream>

#include "liecoh/errors.hpp"

namespace liecoh {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw ParseError("malformed rational: '" + text + "'");
    if (num_end == text.size()) {
        mpq_class v(text);
        v.canonicalize();
        return Rational(std::move(v));
    }
    if (text[num_end] != '/') throw ParseError("malformed rational: '" + text + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
        throw ParseError("malformed rational: '" + text + "'");
    mpq_class v(text);
    if (v.get_den() == 0) throw ParseError("zero denominator in rational: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liecoh
