#include "padyn/arith.hpp"

#include <limits>
#include <ostream>

#include "padyn/errors.hpp"

namespace padyn {

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(unsigned long value) : value_(value) {
    if (!is_prime(value))
        throw InputError(std::to_string(value) + " is not a prime");
}

Integer power(const Prime &p, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p.value(), e);
    return r;
}

std::uint64_t power_u64(const Prime &p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / p.value())
            throw StateLimitExceeded("p^" + std::to_string(e) + " does not fit in 64 bits");
        r *= p.value();
    }
    return r;
}

std::ostream &operator<<(std::ostream &os, const Valuation &v) {
    if (v.is_infinite())
        return os << "+inf";
    return os << v.value();
}

Valuation vp(const Integer &x, const Prime &p) {
    if (x == 0)
        return Valuation::infinity();
    Integer rest;
    Integer prime(p.value());
    auto count = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    return Valuation(static_cast<long>(count));
}

Valuation vp(const Rational &x, const Prime &p) {
    if (x == 0)
        return Valuation::infinity();
    return Valuation(vp(x.get_num(), p).value() - vp(x.get_den(), p).value());
}

Rational norm(const Rational &x, const Prime &p) {
    auto v = vp(x, p);
    if (v.is_infinite())
        return 0;
    if (v.value() >= 0)
        return Rational(Integer(1), power(p, static_cast<unsigned long>(v.value())));
    return Rational(power(p, static_cast<unsigned long>(-v.value())));
}

std::string to_string(const Rational &x) {
    Rational c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string &text) {
    Rational r;
    auto slash = text.find('/');
    auto is_int = [](const std::string &s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto strip_plus = [](const std::string &s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    if (slash == std::string::npos) {
        if (!is_int(text))
            throw ParseError("not a rational: '" + text + "'");
        return Rational(Integer(strip_plus(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational: '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + text + "'");
    r = Rational(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

PadicInt::PadicInt(const Prime &p, unsigned precision, const Integer &value)
    : prime_(p), precision_(precision) {
    Integer modulus = power(p, precision);
    mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

PadicInt PadicInt::truncated(unsigned precision) const {
    if (precision > precision_)
        throw InsufficientPrecision("cannot extend precision " + std::to_string(precision_) +
                                    " to " + std::to_string(precision));
    return PadicInt(prime_, precision, residue_);
}

PadicInt reduce(const Rational &x, const Prime &p, unsigned precision) {
    auto v = vp(x, p);
    if (v.is_finite() && v.value() < 0)
        throw NotIntegral(to_string(x) + " is not a " + std::to_string(p.value()) + "-adic integer");
    Integer modulus = power(p, precision);
    if (modulus == 1)
        return PadicInt(p, 0, 0);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
    return PadicInt(p, precision, x.get_num() * inv);
}

Rational coset_measure(const Prime &p, unsigned depth) {
    return Rational(Integer(1), power(p, depth));
}

} // namespace padyn
