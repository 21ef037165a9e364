#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

namespace ietforge {

using Integer = mpz_class;

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer pow2(unsigned long e) { return pow_integer(2, e); }

// floor(sqrt(n)), n >= 0
inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline size_t bit_length(const Integer& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool fits_long(const Integer& n) { return n.fits_slong_p(); }

inline long to_long(const Integer& n) { return n.get_si(); }

inline std::string to_dec_string(const Integer& n) { return n.get_str(10); }

} // namespace ietforge
