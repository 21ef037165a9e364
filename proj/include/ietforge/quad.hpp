#pragma once

#include "ietforge/ball.hpp"
#include "ietforge/errors.hpp"
#include "ietforge/ordering.hpp"
#include "ietforge/rational.hpp"

#include <string>
#include <string_view>

namespace ietforge {

// Element a + b*sqrt(D) of a real quadratic field, D a positive squarefree
// integer. Sign determination is exact: it reduces to rational comparisons
// of a^2 against b^2*D, so compare never returns Unknown. A value with b = 0
// may carry D = 0 ("pure rational") and adopts the other operand's field.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long v) : a_(v) {} // NOLINT: implicit by design
    explicit QuadElem(Rational a) : a_(std::move(a)) {}
    QuadElem(Rational a, Rational b, unsigned long d);

    static QuadElem sqrt_of(unsigned long d) { return QuadElem(Rational(0), Rational(1), d); }
    static QuadElem parse(std::string_view s);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    unsigned long discriminant() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    int sign() const;

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
    QuadElem operator-() const { return QuadElem(-a_, -b_, d_, unchecked_tag{}); }
    friend QuadElem abs(const QuadElem& x) { return x.sign() < 0 ? -x : x; }
    friend QuadElem operator*(const QuadElem& x, const Integer& n);
    friend QuadElem operator*(const Integer& n, const QuadElem& x) { return x * n; }

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }

    friend Ordering compare(const QuadElem& x, const QuadElem& y) {
        return ordering_from_sign((x - y).sign());
    }
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return compare(x, y) == Ordering::EQ;
    }

    Integer floor() const;

    QuadElem pow(long e) const; // integer exponent, negative allowed

    Ball to_ball(long bits) const;
    double approx() const;

    // "p/q+r/s*sqrt(D)", or "p/q" when the surd part vanishes
    std::string str() const;

private:
    struct unchecked_tag {};
    QuadElem(Rational a, Rational b, unsigned long d, unchecked_tag)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    // resolves the common field of two operands, throws BackendMismatchError
    static unsigned long join_field(const QuadElem& x, const QuadElem& y);

    Rational a_;
    Rational b_;
    unsigned long d_ = 0;
};

// g = (1 + sqrt(5)) / 2, with g^2 = g + 1
QuadElem golden();

} // namespace ietforge
