#include "ietforge/quad.hpp"

#include <cmath>

namespace ietforge {

namespace {

bool is_squarefree(unsigned long d) {
    // trial division; complete for d up to ~10^10, which covers any
    // discriminant that occurs in practice
    for (unsigned long p = 2; p * p <= d && p <= 100000UL; ++p) {
        unsigned long k = 0;
        while (d % p == 0) {
            d /= p;
            ++k;
        }
        if (k >= 2) return false;
    }
    Integer rem(static_cast<unsigned long>(d));
    Integer root = isqrt(rem);
    return !(root * root == rem && rem > 1);
}

} // namespace

QuadElem::QuadElem(Rational a, Rational b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!b_.is_zero()) {
        if (d_ < 2) throw std::invalid_argument("quadratic discriminant must be >= 2");
        if (!is_squarefree(d_))
            throw std::invalid_argument("quadratic discriminant must be squarefree");
    }
}

unsigned long QuadElem::join_field(const QuadElem& x, const QuadElem& y) {
    unsigned long fx = x.b_.is_zero() ? 0 : x.d_;
    unsigned long fy = y.b_.is_zero() ? 0 : y.d_;
    if (fx == 0) return fy;
    if (fy == 0) return fx;
    if (fx != fy)
        throw BackendMismatchError("quadratic elements over different fields: sqrt(" +
                                   std::to_string(fx) + ") vs sqrt(" + std::to_string(fy) + ")");
    return fx;
}

int QuadElem::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: decide by a^2 vs b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(Integer(d_));
    Ordering o = compare(lhs, rhs);
    if (o == Ordering::EQ) return 0;
    bool rational_dominates = o == Ordering::GT;
    return rational_dominates ? sa : sb;
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    unsigned long d = QuadElem::join_field(x, y);
    return QuadElem(x.a_ + y.a_, x.b_ + y.b_, d, QuadElem::unchecked_tag{});
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    unsigned long d = QuadElem::join_field(x, y);
    return QuadElem(x.a_ - y.a_, x.b_ - y.b_, d, QuadElem::unchecked_tag{});
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    unsigned long d = QuadElem::join_field(x, y);
    Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(Integer(d));
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadElem(std::move(a), std::move(b), d, QuadElem::unchecked_tag{});
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    if (y.is_zero()) throw std::domain_error("quadratic division by zero");
    unsigned long d = QuadElem::join_field(x, y);
    // 1/(a+b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because d is not a perfect square
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(Integer(d));
    QuadElem conj(y.a_, -y.b_, d, QuadElem::unchecked_tag{});
    QuadElem prod = x * conj;
    return QuadElem(prod.a_ / norm, prod.b_ / norm, d, QuadElem::unchecked_tag{});
}

QuadElem operator*(const QuadElem& x, const Integer& n) {
    return QuadElem(x.a_ * n, x.b_ * n, x.d_, QuadElem::unchecked_tag{});
}

Integer QuadElem::floor() const {
    if (b_.is_zero()) return a_.floor();
    // bracket sqrt(d) between dyadic rationals until the floor stabilises
    for (unsigned long t = 32;; t *= 2) {
        Integer scaled = Integer(d_) << (2 * t);
        Integer s = isqrt(scaled);
        Rational lo_root(s, pow2(t));
        Rational hi_root(s + 1, pow2(t));
        Rational lo = a_ + b_ * (b_.sign() > 0 ? lo_root : hi_root);
        Rational hi = a_ + b_ * (b_.sign() > 0 ? hi_root : lo_root);
        Integer fl = lo.floor(), fh = hi.floor();
        if (fl == fh) return fl;
        if (t > 1u << 20) throw std::logic_error("floor of quadratic element did not stabilise");
    }
}

QuadElem QuadElem::pow(long e) const {
    if (e < 0) return QuadElem(1) / pow(-e);
    QuadElem r(1);
    QuadElem base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Ball QuadElem::to_ball(long bits) const {
    if (bits < 2) throw std::invalid_argument("precision must be >= 2");
    if (b_.is_zero()) return Ball::from_rational(a_, bits);
    Dyadic target(1, -bits);
    for (long t = bits + 8;; t *= 2) {
        BallPrecisionGuard guard(t + 16);
        Integer scaled = Integer(d_) << (2 * static_cast<unsigned long>(t));
        Integer s = isqrt(scaled);
        // sqrt(d) lies in [s, s+1] * 2^-t
        Ball root(Dyadic(2 * s + 1, -t - 1), Dyadic(1, -t - 1));
        Ball out = Ball::from_rational(a_, t) + Ball::from_rational(b_, t) * root;
        if (compare(out.radius(), target) != Ordering::GT) return out;
        if (t > (bits + 64) * 64) throw std::logic_error("ball conversion did not converge");
    }
}

double QuadElem::approx() const {
    return a_.approx() + b_.approx() * std::sqrt(static_cast<double>(d_));
}

std::string QuadElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.str();
    s += b_.sign() < 0 ? "-" : "+";
    s += abs(b_).str();
    s += "*sqrt(" + std::to_string(d_) + ")";
    return s;
}

QuadElem QuadElem::parse(std::string_view s) {
    auto star = s.find("*sqrt(");
    if (star == std::string_view::npos) return QuadElem(Rational::parse(s));
    if (s.back() != ')') throw std::invalid_argument("bad quadratic literal: " + std::string(s));
    unsigned long d = std::stoul(std::string(s.substr(star + 6, s.size() - star - 7)));
    // the sign splitting a from b is the last +/- before "*sqrt" that is not
    // a leading sign of the whole literal
    size_t split = std::string_view::npos;
    for (size_t i = star; i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        throw std::invalid_argument("bad quadratic literal: " + std::string(s));
    Rational a = Rational::parse(s.substr(0, split));
    Rational b = Rational::parse(s.substr(split + 1, star - split - 1));
    if (s[split] == '-') b = -b;
    return QuadElem(std::move(a), std::move(b), d);
}

QuadElem golden() {
    return QuadElem(Rational(1, 2), Rational(1, 2), 5);
}

} // namespace ietforge
