#ifndef ZETAFORMS_RATIONAL_HPP
#define ZETAFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace zetaforms {

// Exact arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (reduced, positive denominator), which the integrality checks
// below rely on.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an internal consistency check fails. These are conditions the
// underlying mathematics guarantees; tripping one means a bookkeeping bug,
// not bad user input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when an iterative evaluation fails to meet its tolerance within the
// configured resource limits.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for signed e; negative exponents flip numerator and denominator.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    Rat r;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q = a/b with b > 0 in lowest terms.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool divides(const Int& d, const Int& m) {
    if (d == 0) return m == 0;
    return mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; throws if d does not divide m.
inline Int exact_div(const Int& m, const Int& d) {
    if (!divides(d, m)) throw InvariantViolation("exact_div: not divisible");
    Int r;
    mpz_divexact(r.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
    return r;
}

} // namespace zetaforms

#endif
