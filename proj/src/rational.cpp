#include "bialg/rational.hpp"

#include <cctype>
#include <ostream>

#include "bialg/errors.hpp"

namespace bialg {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (!digits(den) || den == "0")
            throw SchemaError("bad rational \"" + std::string(s) + "\": denominator must be a positive integer");
    }
    std::string_view mag = num;
    if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
    if (!digits(mag))
        throw SchemaError("bad rational \"" + std::string(s) + "\": expected \"p\" or \"p/q\"");
    mpq_class q(std::string(num) + (den.empty() ? "" : "/" + std::string(den)));
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return q_.get_str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace bialg
