#include "breather/rational.hpp"

#include <cctype>
#include <ostream>

namespace breather {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("empty rational literal");
    // mpq accepts hex-ish and leading-zero forms we do not want; validate shape first.
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') body = body.substr(1);
    const auto slash = body.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = digits(body);
    } else {
        ok = digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    }
    if (!ok) throw Error("not an exact rational: '" + text + "' (use p or p/q)");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("not an exact rational: '" + text + "'");
    if (q.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("zero to a negative power");
        return Rational(0);
    }
    mpz_class n = v_.get_num(), d = v_.get_den();
    if (e < 0) {
        std::swap(n, d);
        e = -e;
        if (sgn(d) < 0) { n = -n; d = -d; }
    }
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(np, dp);
    r.canonicalize();
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(long n) {
    if (n < 0) throw Error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

}  // namespace breather
