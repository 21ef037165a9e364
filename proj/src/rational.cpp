#include "ietforge/rational.hpp"

#include <charconv>

namespace ietforge {

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        Integer num(std::string(s.substr(0, slash)));
        Integer den(std::string(s.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    }
}

std::string Rational::str() const {
    return to_dec_string(num()) + "/" + to_dec_string(den());
}

} // namespace ietforge
