#pragma once

// Exact rational scalars shared by every module. Thin helpers around
// gmpxx's mpq_class: parsing and printing in the "p/q" form used by
// config and report files, plus integer powers.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace polycore {

using Rational = mpq_class;

// Parse "p" or "p/q" (optional leading '-'); result is canonical.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rational_from_string: empty string");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            throw std::invalid_argument("rational_from_string: bad character in \"" + s + "\"");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse \"" + s + "\"");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

//"p/q" with positive q, or plain "p" for integers.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // base is canonical, so num^e/den^e already is
}

}  // namespace polycore
