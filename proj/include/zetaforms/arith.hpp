#ifndef ZETAFORMS_ARITH_HPP
#define ZETAFORMS_ARITH_HPP

#include <mpfr.h>

#include <stdexcept>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// d_n = lcm{1,...,n}, by folding lcm over the range.
inline Int lcm_up_to(long n) {
    if (n < 1) throw std::invalid_argument("lcm_up_to: n must be >= 1");
    Int d = 1;
    for (long m = 2; m <= n; ++m) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m));
    }
    return d;
}

// Deterministic trial division. Inputs here are tiny primes (the p of a
// p-adic valuation), so nothing cleverer is warranted.
inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f) {
        if (divides(f, p)) return f == p;
    }
    return true;
}

// nu_p(x) for nonzero rational x: valuation of the numerator minus valuation
// of the denominator. Additive on products.
inline long p_valuation(const Int& p, const Rat& x) {
    if (!is_prime(p)) throw std::invalid_argument("p_valuation: p is not prime");
    if (x == 0) throw std::invalid_argument("p_valuation: x must be nonzero");
    Int tmp;
    const long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
    const long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

// n!/gcd(D^n, n!) -- the maximal divisor of n! coprime to D.
inline Int coprime_factorial_part(long n, const Int& D) {
    if (n < 1 || D < 1) throw std::invalid_argument("coprime_factorial_part: n, D must be >= 1");
    const Int nf = factorial(static_cast<unsigned long>(n));
    Int g;
    const Int Dn = int_pow(D, static_cast<unsigned long>(n));
    mpz_gcd(g.get_mpz_t(), Dn.get_mpz_t(), nf.get_mpz_t());
    return exact_div(nf, g);
}

// Checks that n!/gcd(D^n, n!) divides prod_{j=k}^{n+k-1} (Dj + i). The
// divisibility always holds; the predicate exists as a runtime witness.
inline bool lemma2_divides(const Int& D, long n, const Int& k, const Int& i) {
    if (n < 1 || D < 1) throw std::invalid_argument("lemma2_divides: n, D must be >= 1");
    Int prod = 1;
    for (Int j = k; j < k + n; ++j) {
        prod *= D * j + i;
    }
    return divides(coprime_factorial_part(n, D), prod);
}

// d_n^{1/n} for n = 1..N. The prime number theorem says this tends to e;
// the table is for empirical inspection only.
inline std::vector<double> lcm_root_trend(long N) {
    if (N < 1) throw std::invalid_argument("lcm_root_trend: N must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(N));
    Int d = 1;
    mpfr_t t;
    mpfr_init2(t, 128);
    for (long n = 1; n <= N; ++n) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
        mpfr_set_z(t, d.get_mpz_t(), MPFR_RNDN);
        mpfr_log(t, t, MPFR_RNDN);
        mpfr_div_si(t, t, n, MPFR_RNDN);
        mpfr_exp(t, t, MPFR_RNDN);
        out.push_back(mpfr_get_d(t, MPFR_RNDN));
    }
    mpfr_clear(t);
    return out;
}

} // namespace zetaforms

#endif
