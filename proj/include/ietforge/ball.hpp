#pragma once

#include "ietforge/dyadic.hpp"
#include "ietforge/errors.hpp"
#include "ietforge/ordering.hpp"
#include "ietforge/rational.hpp"

#include <string>
#include <string_view>

namespace ietforge {

// Working precision (bits of the center mantissa) for ball operations in the
// current thread. Initialised from IETFORGE_PRECISION, default 256.
long ball_precision();
void set_ball_precision(long bits);

class BallPrecisionGuard {
public:
    explicit BallPrecisionGuard(long bits) : saved_(ball_precision()) { set_ball_precision(bits); }
    ~BallPrecisionGuard() { set_ball_precision(saved_); }
    BallPrecisionGuard(const BallPrecisionGuard&) = delete;
    BallPrecisionGuard& operator=(const BallPrecisionGuard&) = delete;

private:
    long saved_;
};

// Closed interval [center - radius, center + radius] with dyadic endpoints.
// Every arithmetic result contains the exact image of the operand intervals;
// centers are rounded to the working precision and the rounding error is
// absorbed into the radius.
class Ball {
public:
    Ball() = default;
    Ball(Dyadic center, Dyadic radius);
    Ball(long v) : c_(v) {} // NOLINT: implicit by design

    static Ball exact(Dyadic d) { return Ball(std::move(d), Dyadic()); }
    static Ball from_rational(const Rational& x, long bits);
    // smallest ball (at working precision) containing [lo, hi]
    static Ball from_rational_interval(const Rational& lo, const Rational& hi, long bits);

    const Dyadic& center() const { return c_; }
    const Dyadic& radius() const { return r_; }
    bool is_exact() const { return r_.is_zero(); }
    Dyadic lower() const { return c_ - r_; }
    Dyadic upper() const { return c_ + r_; }
    Dyadic width() const { return r_ + r_; }

    bool contains(const Rational& x) const;
    bool contains_zero() const;
    bool overlaps(const Ball& o) const;

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball operator-() const { return Ball(-c_, r_); }
    friend Ball abs(const Ball& a);
    friend Ball operator*(const Ball& a, const Integer& n);
    friend Ball operator*(const Integer& n, const Ball& a) { return a * n; }

    Ball& operator+=(const Ball& o) { return *this = *this + o; }
    Ball& operator-=(const Ball& o) { return *this = *this - o; }

    friend Ordering compare(const Ball& a, const Ball& b);

    double approx() const { return c_.approx(); }

    // "[c±r]" with dyadic hex components
    std::string str() const;
    static Ball parse(std::string_view s);

private:
    static Ball rounded(const Dyadic& c, const Dyadic& r);

    Dyadic c_;
    Dyadic r_;
};

} // namespace ietforge
