#include "fiberosc/rational.hpp"

#include <cctype>
#include <ostream>

namespace fiberosc {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("rational: cannot parse '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpq_class v;
    if (v.set_str(num + "/" + den, 10) != 0)
        throw ParseError("rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw ParseError("rational: zero denominator in '" + text + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::string Rational::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("rational: reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

long Rational::ceil_long() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw DomainError("rational: ceil does not fit a machine integer");
    return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace fiberosc
