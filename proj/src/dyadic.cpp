#include "ietforge/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ietforge {

void Dyadic::normalize() {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mant_ >>= tz;
        exp_ += static_cast<long>(tz);
    }
}

namespace {

Integer shifted(const Integer& m, long up) {
    Integer r;
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(up));
    return r;
}

} // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long e = std::min(a.exp_, b.exp_);
    Integer m = shifted(a.mant_, a.exp_ - e) + shifted(b.mant_, b.exp_ - e);
    return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

Ordering compare(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return ordering_from_sign(sa - sb);
    if (sa == 0) return Ordering::EQ;
    long e = std::min(a.exp_, b.exp_);
    return ordering_from_sign(cmp(shifted(a.mant_, a.exp_ - e), shifted(b.mant_, b.exp_ - e)));
}

Ordering compare(const Dyadic& a, const Rational& b) {
    // mant*2^e vs p/q  <=>  mant*q*2^e vs p
    Integer lhs = a.mant_ * b.den();
    Integer rhs = b.num();
    if (a.exp_ >= 0)
        lhs = shifted(lhs, a.exp_);
    else
        rhs = shifted(rhs, -a.exp_);
    return ordering_from_sign(cmp(lhs, rhs));
}

Dyadic Dyadic::rounded(long bits, RoundMode mode, Dyadic* err_bound) const {
    if (bits < 2) throw std::invalid_argument("rounding precision must be >= 2");
    if (err_bound) *err_bound = Dyadic();
    long have = static_cast<long>(mantissa_bits());
    if (have <= bits) return *this;
    long shift = have - bits;
    Integer mag = ::abs(mant_);
    Integer q = mag >> shift;
    Integer rem = mag - shifted(q, shift);
    bool bump = false;
    if (mode == RoundMode::AwayFromZero) {
        bump = rem != 0;
        if (err_bound && bump) *err_bound = Dyadic(1, exp_ + shift);
    } else {
        Integer halfway = pow2(static_cast<unsigned long>(shift - 1));
        bump = rem >= halfway;
        if (err_bound && rem != 0) *err_bound = Dyadic(1, exp_ + shift - 1);
    }
    if (bump) q += 1;
    if (sign() < 0) q = -q;
    return Dyadic(std::move(q), exp_ + shift);
}

Dyadic Dyadic::from_rational(const Rational& x, long bits, RoundMode mode, Dyadic* err_bound) {
    if (bits < 2) throw std::invalid_argument("rounding precision must be >= 2");
    if (err_bound) *err_bound = Dyadic();
    if (x.is_zero()) return Dyadic();
    Integer p = x.num();
    Integer q = x.den();
    Integer mag = ::abs(p);
    // scale so the truncated quotient carries bits+1 significant bits
    long s = bits + 1 + static_cast<long>(bit_length(q)) - static_cast<long>(bit_length(mag));
    if (s < 0) s = 0;
    Integer num = shifted(mag, s);
    Integer t, rem;
    mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    bool exact = rem == 0;
    if (!exact) {
        if (mode == RoundMode::AwayFromZero) {
            t += 1;
        } else {
            // round to nearest on the scaled quotient
            if (rem * 2 >= q) t += 1;
        }
        if (err_bound) *err_bound = Dyadic(1, -s);
    }
    if (x.sign() < 0) t = -t;
    Dyadic approx(std::move(t), -s);
    if (exact) return approx; // dyadic rationals come through unrounded
    Dyadic extra;
    Dyadic out = approx.rounded(bits, mode, &extra);
    if (err_bound) *err_bound = *err_bound + extra;
    return out;
}

Rational Dyadic::to_rational() const {
    if (exp_ >= 0) return Rational(shifted(mant_, exp_));
    return Rational(mant_, pow2(static_cast<unsigned long>(-exp_)));
}

double Dyadic::approx() const {
    // good enough for display; huge exponents saturate to +-inf
    double m = mant_.get_d();
    return std::ldexp(m, static_cast<int>(std::clamp(exp_, -100000L, 100000L)));
}

std::string Dyadic::hex_str() const {
    std::string s = sign() < 0 ? "-0x" : "0x";
    Integer mag = ::abs(mant_);
    s += mag.get_str(16);
    s += "p";
    s += std::to_string(exp_);
    return s;
}

Dyadic Dyadic::parse_hex(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.size() < 3 || s.substr(0, 2) != "0x")
        throw std::invalid_argument("bad dyadic literal");
    s.remove_prefix(2);
    auto p = s.find('p');
    if (p == std::string_view::npos) throw std::invalid_argument("bad dyadic literal");
    Integer mant(std::string(s.substr(0, p)), 16);
    long exp = std::stol(std::string(s.substr(p + 1)));
    if (neg) mant = -mant;
    return Dyadic(std::move(mant), exp);
}

} // namespace ietforge
