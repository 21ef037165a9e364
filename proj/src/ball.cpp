#include "ietforge/ball.hpp"

#include <algorithm>
#include <cstdlib>

namespace ietforge {

namespace {

constexpr long kRadiusBits = 32;
constexpr long kDefaultPrecision = 256;

long env_default_precision() {
    if (const char* e = std::getenv("IETFORGE_PRECISION")) {
        long v = std::atol(e);
        if (v >= 2) return v;
    }
    return kDefaultPrecision;
}

thread_local long g_precision = 0; // 0 = not initialised yet

} // namespace

long ball_precision() {
    if (g_precision == 0) g_precision = env_default_precision();
    return g_precision;
}

void set_ball_precision(long bits) {
    if (bits < 2) throw std::invalid_argument("ball precision must be >= 2");
    g_precision = bits;
}

Ball::Ball(Dyadic center, Dyadic radius) : c_(std::move(center)), r_(std::move(radius)) {
    if (r_.sign() < 0) throw std::invalid_argument("negative ball radius");
}

Ball Ball::rounded(const Dyadic& c, const Dyadic& r) {
    Dyadic cerr;
    Dyadic rc = c.rounded(ball_precision(), RoundMode::Nearest, &cerr);
    Dyadic rr = (r + cerr).rounded(kRadiusBits, RoundMode::AwayFromZero);
    return Ball(std::move(rc), std::move(rr));
}

Ball Ball::from_rational(const Rational& x, long bits) {
    Dyadic err;
    Dyadic c = Dyadic::from_rational(x, bits, RoundMode::Nearest, &err);
    return Ball(std::move(c), std::move(err));
}

Ball Ball::from_rational_interval(const Rational& lo, const Rational& hi, long bits) {
    if (hi < lo) throw std::invalid_argument("empty rational interval");
    Rational c = (lo + hi) / Rational(2);
    Rational r = (hi - lo) / Rational(2);
    Dyadic cerr;
    Dyadic dc = Dyadic::from_rational(c, bits, RoundMode::Nearest, &cerr);
    Dyadic dr = Dyadic::from_rational(r, kRadiusBits, RoundMode::AwayFromZero) + cerr;
    return Ball(std::move(dc), dr.rounded(kRadiusBits, RoundMode::AwayFromZero));
}

bool Ball::contains(const Rational& x) const {
    // c - r <= x <= c + r, exactly
    return compare(lower(), x) != Ordering::GT && compare(upper(), x) != Ordering::LT;
}

bool Ball::contains_zero() const { return contains(Rational(0)); }

bool Ball::overlaps(const Ball& o) const {
    return compare(upper(), o.lower()) != Ordering::LT &&
           compare(o.upper(), lower()) != Ordering::LT;
}

Ball operator+(const Ball& a, const Ball& b) {
    return Ball::rounded(a.c_ + b.c_, a.r_ + b.r_);
}

Ball operator-(const Ball& a, const Ball& b) {
    return Ball::rounded(a.c_ - b.c_, a.r_ + b.r_);
}

Ball operator*(const Ball& a, const Ball& b) {
    Dyadic r = abs(a.c_) * b.r_ + abs(b.c_) * a.r_ + a.r_ * b.r_;
    return Ball::rounded(a.c_ * b.c_, r);
}

Ball operator*(const Ball& a, const Integer& n) {
    return Ball::rounded(a.c_ * Dyadic(n, 0), a.r_ * Dyadic(::abs(n), 0));
}

Ball operator/(const Ball& a, const Ball& b) {
    if (compare(abs(b.c_), b.r_) != Ordering::GT)
        throw PrecisionExhaustedError("ball division by interval containing zero");
    // exact rational endpoint arithmetic, then one outward rounding
    Rational alo = a.lower().to_rational(), ahi = a.upper().to_rational();
    Rational blo = b.lower().to_rational(), bhi = b.upper().to_rational();
    Rational q0 = alo / blo, q1 = alo / bhi, q2 = ahi / blo, q3 = ahi / bhi;
    Rational lo = std::min(std::min(q0, q1), std::min(q2, q3));
    Rational hi = std::max(std::max(q0, q1), std::max(q2, q3));
    return Ball::from_rational_interval(lo, hi, ball_precision());
}

Ball abs(const Ball& a) {
    if (compare(a.c_, a.r_) != Ordering::LT) return a;        // entirely >= 0
    if (compare(-a.c_, a.r_) != Ordering::LT) return -a;      // entirely <= 0
    // straddles zero: |x| ranges over [0, |c|+r]
    Dyadic hi = abs(a.c_) + a.r_;
    return Ball::rounded(hi.half(), hi.half());
}

Ordering compare(const Ball& a, const Ball& b) {
    if (a.is_exact() && b.is_exact()) return compare(a.c_, b.c_);
    if (compare(a.upper(), b.lower()) == Ordering::LT) return Ordering::LT;
    if (compare(b.upper(), a.lower()) == Ordering::LT) return Ordering::GT;
    return Ordering::Unknown;
}

std::string Ball::str() const {
    return "[" + c_.hex_str() + "±" + r_.hex_str() + "]";
}

Ball Ball::parse(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("bad ball literal");
    s.remove_prefix(1);
    s.remove_suffix(1);
    auto sep = s.find("±");
    size_t sep_len = 2; // UTF-8 length of the sign
    if (sep == std::string_view::npos) {
        sep = s.find("+-");
        sep_len = 2;
    }
    if (sep == std::string_view::npos) throw std::invalid_argument("bad ball literal");
    Dyadic c = Dyadic::parse_hex(s.substr(0, sep));
    Dyadic r = Dyadic::parse_hex(s.substr(sep + sep_len));
    return Ball(std::move(c), std::move(r));
}

} // namespace ietforge
