#pragma once

#include "ietforge/errors.hpp"
#include "ietforge/integer.hpp"
#include "ietforge/ordering.hpp"

#include <string>
#include <string_view>

namespace ietforge {

// Exact rational number, always stored in lowest terms with positive
// denominator. The length arithmetic of rational interval exchanges runs
// entirely on this type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        v_.canonicalize();
    }

    // "p/q" or "p"
    static Rational parse(std::string_view s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return v_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend Rational operator*(const Rational& a, const Integer& n) { return Rational(mpq_class(a.v_ * n)); }
    friend Rational operator*(const Integer& n, const Rational& a) { return a * n; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Ordering compare(const Rational& a, const Rational& b) {
        return ordering_from_sign(cmp(a.v_, b.v_));
    }
    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    double approx() const { return v_.get_d(); }

    // canonical "p/q" rendering, used verbatim in reports
    std::string str() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

} // namespace ietforge
