#include "padyn/poly.hpp"

#include <algorithm>

#include "padyn/errors.hpp"

namespace padyn {

namespace {

Integer common_denominator(const std::vector<Rational> &coeffs) {
    Integer d = 1;
    for (const auto &c : coeffs)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
    return d;
}

} // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto &c : coeffs_)
        c.canonicalize();
    trim();
}

RationalPoly RationalPoly::constant(const Rational &c) { return RationalPoly({c}); }

RationalPoly RationalPoly::identity() { return RationalPoly({Rational(0), Rational(1)}); }

Rational RationalPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational &x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPoly &RationalPoly::operator+=(const RationalPoly &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly &RationalPoly::operator-=(const RationalPoly &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

RationalPoly &RationalPoly::operator*=(const RationalPoly &rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPoly &RationalPoly::operator*=(const Rational &c) {
    for (auto &x : coeffs_)
        x *= c;
    trim();
    return *this;
}

RationalPoly &RationalPoly::operator/=(const Rational &c) {
    if (c == 0)
        throw InputError("polynomial division by zero");
    for (auto &x : coeffs_)
        x /= c;
    return *this;
}

Rational poly_eval_exact(const RationalPoly &f, const Integer &x) { return f(Rational(x)); }

std::vector<Rational> taylor_shift(const RationalPoly &f, const Integer &a) {
    // Shift D*f with integer arithmetic, then divide back.
    const auto &c = f.coeffs();
    Integer den = common_denominator(c);
    std::vector<Integer> s(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        s[k] = c[k].get_num() * (den / c[k].get_den());
    const std::size_t n = s.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            s[j] += a * s[j + 1];
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = Rational(s[k], den);
        out[k].canonicalize();
    }
    return out;
}

RationalPoly derivative(const RationalPoly &f) {
    const auto &c = f.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = c[k] * static_cast<unsigned long>(k);
    return RationalPoly(std::move(d));
}

RationalPoly binom_poly(unsigned n) {
    // Integer falling factorial first, then one division by n!.
    std::vector<Integer> prod{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Integer> next(prod.size() + 1);
        for (std::size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] += prod[k];
            next[k] -= prod[k] * i;
        }
        prod = std::move(next);
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    std::vector<Rational> coeffs(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k) {
        coeffs[k] = Rational(prod[k], fact);
        coeffs[k].canonicalize();
    }
    return RationalPoly(std::move(coeffs));
}

RationalPoly pow(const RationalPoly &f, unsigned e) {
    RationalPoly result = RationalPoly::constant(1);
    RationalPoly base = f;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

RationalPoly compose(const RationalPoly &outer, const RationalPoly &inner) {
    RationalPoly acc;
    const auto &c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= inner;
        acc += RationalPoly::constant(*it);
    }
    return acc;
}

PadicEvaluator::PadicEvaluator(const RationalPoly &f, const Prime &p) : prime_(p) {
    const auto &c = f.coeffs();
    Integer den = common_denominator(c);
    scaled_.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        scaled_[k] = c[k].get_num() * (den / c[k].get_den());
    auto v = vp(den, p);
    denom_exponent_ = static_cast<unsigned>(v.value());
    denom_unit_ = den / power(p, denom_exponent_);

    long worst = 0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        auto vk = vp(c[k], p);
        if (vk.is_finite())
            worst = std::min(worst, vk.value());
    }
    loss_ = static_cast<unsigned>(-worst);
}

Integer PadicEvaluator::residue_at(const Integer &x, unsigned precision) const {
    const Integer modulus = power(prime_, precision + denom_exponent_);
    Integer acc = 0;
    for (auto it = scaled_.rbegin(); it != scaled_.rend(); ++it) {
        acc = acc * x + *it;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
    }
    const Integer shift = power(prime_, denom_exponent_);
    if (!mpz_divisible_p(acc.get_mpz_t(), shift.get_mpz_t()))
        throw NotIntegral("value at " + x.get_str() + " is not a " + std::to_string(prime_.value()) +
                          "-adic integer");
    acc /= shift;
    const Integer target = power(prime_, precision);
    if (target == 1)
        return 0;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), denom_unit_.get_mpz_t(), target.get_mpz_t());
    acc *= inv;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), target.get_mpz_t());
    return acc;
}

PadicInt PadicEvaluator::operator()(const PadicInt &x) const {
    if (x.prime().value() != prime_.value())
        throw InputError("prime mismatch in p-adic evaluation");
    if (x.precision() <= loss_)
        throw InsufficientPrecision("input known mod p^" + std::to_string(x.precision()) +
                                    " loses " + std::to_string(loss_) + " digit(s)");
    unsigned out = x.precision() - loss_;
    return PadicInt(prime_, out, residue_at(x.residue(), out));
}

PadicInt poly_eval_padic(const RationalPoly &f, const PadicInt &x) {
    return PadicEvaluator(f, x.prime())(x);
}

} // namespace padyn
