#pragma once

#include "ietforge/ball.hpp"
#include "ietforge/errors.hpp"
#include "ietforge/ordering.hpp"
#include "ietforge/quad.hpp"
#include "ietforge/rational.hpp"

#include <concepts>
#include <string>
#include <string_view>

namespace ietforge {

// Uniform access to the scalar backends. Length data, orbit points and gap
// values are all generic over one of Rational, QuadElem, Ball.
template <class S> struct ScalarTraits;

template <> struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* backend_tag = "rational";
    static Rational from_rational(const Rational& r) { return r; }
    static Rational from_int(long n) { return Rational(n); }
    static Ball to_ball(const Rational& x, long bits) { return Ball::from_rational(x, bits); }
    static Integer floor(const Rational& x) { return x.floor(); }
    static double approx(const Rational& x) { return x.approx(); }
    static std::string str(const Rational& x) { return x.str(); }
    static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <> struct ScalarTraits<QuadElem> {
    static constexpr bool exact = true;
    static constexpr const char* backend_tag = "quad";
    static QuadElem from_rational(const Rational& r) { return QuadElem(r); }
    static QuadElem from_int(long n) { return QuadElem(Rational(n)); }
    static Ball to_ball(const QuadElem& x, long bits) { return x.to_ball(bits); }
    static Integer floor(const QuadElem& x) { return x.floor(); }
    static double approx(const QuadElem& x) { return x.approx(); }
    static std::string str(const QuadElem& x) { return x.str(); }
    static QuadElem parse(std::string_view s) { return QuadElem::parse(s); }
};

template <> struct ScalarTraits<Ball> {
    static constexpr bool exact = false;
    static constexpr const char* backend_tag = "ball";
    static Ball from_rational(const Rational& r) { return Ball::from_rational(r, ball_precision()); }
    static Ball from_int(long n) { return Ball::exact(Dyadic(n)); }
    // a ball already encloses its value; re-rounding could only widen it
    static Ball to_ball(const Ball& x, long) { return x; }
    static double approx(const Ball& x) { return x.approx(); }
    static std::string str(const Ball& x) { return x.str(); }
    static Ball parse(std::string_view s) { return Ball::parse(s); }
};

template <class S>
concept ScalarBackend = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { abs(a) } -> std::convertible_to<S>;
    { compare(a, b) } -> std::same_as<Ordering>;
    { a * Integer(1) } -> std::convertible_to<S>;
    requires std::default_initializable<S>;
};

static_assert(ScalarBackend<Rational>);
static_assert(ScalarBackend<QuadElem>);
static_assert(ScalarBackend<Ball>);

inline Ordering require_known(Ordering o, const char* context) {
    if (o == Ordering::Unknown) throw PrecisionExhaustedError(context);
    return o;
}

template <ScalarBackend S> bool definitely_less(const S& a, const S& b) {
    return require_known(compare(a, b), "undecidable comparison") == Ordering::LT;
}

template <ScalarBackend S> bool definitely_positive(const S& x) {
    return require_known(compare(x, S{}), "undecidable sign") == Ordering::GT;
}

// strict weak ordering that refuses to guess
template <ScalarBackend S> struct ExactLess {
    bool operator()(const S& a, const S& b) const { return definitely_less(a, b); }
};

template <ScalarBackend S> Ball to_ball(const S& x, long precision) {
    if (precision < 2) throw std::invalid_argument("precision must be >= 2");
    return ScalarTraits<S>::to_ball(x, precision);
}

template <ScalarBackend S> std::string scalar_str(const S& x) { return ScalarTraits<S>::str(x); }

} // namespace ietforge
