#pragma once

#include "ietforge/integer.hpp"
#include "ietforge/ordering.hpp"
#include "ietforge/rational.hpp"

#include <string>
#include <string_view>

namespace ietforge {

enum class RoundMode { Nearest, AwayFromZero };

// Exact dyadic number mant * 2^exp, normalized so mant is odd (or zero with
// exp zero). Addition and multiplication are exact; rounding is explicit and
// always reports an error bound, which is what makes ball arithmetic
// reproducible across platforms.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); } // NOLINT: implicit by design
    Dyadic(Integer mant, long exp) : mant_(std::move(mant)), exp_(exp) { normalize(); }

    const Integer& mantissa() const { return mant_; }
    long exponent() const { return exp_; }

    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }
    size_t mantissa_bits() const { return bit_length(mant_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-mant_, exp_); }
    friend Dyadic abs(const Dyadic& a) { return Dyadic(::abs(a.mant_), a.exp_); }

    // exact halving (dyadic, so always representable)
    Dyadic half() const { return Dyadic(mant_, exp_ - 1); }

    friend Ordering compare(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.mant_ == b.mant_ && a.exp_ == b.exp_;
    }

    friend Ordering compare(const Dyadic& a, const Rational& b);

    // Keep at most `bits` significant bits. If an error bound pointer is
    // given it receives a dyadic >= |rounded - exact|.
    Dyadic rounded(long bits, RoundMode mode, Dyadic* err_bound = nullptr) const;

    // Dyadic approximation of a rational with |result - x| <= returned bound.
    // AwayFromZero yields |result| >= |x|.
    static Dyadic from_rational(const Rational& x, long bits, RoundMode mode,
                                Dyadic* err_bound = nullptr);

    Rational to_rational() const;
    double approx() const;

    // "0x<hex mantissa>p<decimal exponent>", e.g. "0x1a2bp-12"
    std::string hex_str() const;
    static Dyadic parse_hex(std::string_view s);

private:
    void normalize();

    Integer mant_;
    long exp_;
};

} // namespace ietforge
