#ifndef ZETAFORMS_JET_HPP
#define ZETAFORMS_JET_HPP

#include <cstddef>
#include <vector>

#include "zetaforms/rational.hpp"

namespace zetaforms {

// Truncated power series in a local variable u, with exact rational
// coefficients c_0..c_order. Arithmetic is closed at fixed order; this is
// what extracts Laurent coefficients at poles without symbolic
// differentiation.
class Jet {
public:
    explicit Jet(size_t order) : c_(order + 1, Rat(0)) {}
    Jet(const Rat& constant, size_t order) : c_(order + 1, Rat(0)) { c_[0] = constant; }

    size_t order() const { return c_.size() - 1; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    Rat& operator[](size_t i) { return c_[i]; }

    Jet& operator+=(const Jet& o) {
        for (size_t i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Jet& scale(const Rat& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    // Multiply by the linear factor (a + u) in place; O(order).
    Jet& mul_linear(const Rat& a) {
        for (size_t i = order(); i >= 1; --i) {
            c_[i] = c_[i] * a + c_[i - 1];
        }
        c_[0] *= a;
        return *this;
    }

    // Truncated product.
    friend Jet operator*(const Jet& x, const Jet& y) {
        const size_t ord = x.order();
        Jet r(ord);
        for (size_t i = 0; i <= ord; ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; i + j <= ord; ++j) {
                if (y.c_[j] == 0) continue;
                r.c_[i + j] += x.c_[i] * y.c_[j];
            }
        }
        return r;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    Jet reciprocal() const {
        if (c_[0] == 0) throw InvariantViolation("Jet::reciprocal: zero constant term");
        const size_t ord = order();
        Jet r(ord);
        const Rat inv0 = 1 / c_[0];
        r.c_[0] = inv0;
        for (size_t m = 1; m <= ord; ++m) {
            Rat acc(0);
            for (size_t i = 1; i <= m; ++i) {
                if (c_[i] == 0) continue;
                acc += c_[i] * r.c_[m - i];
            }
            r.c_[m] = -acc * inv0;
        }
        return r;
    }

private:
    std::vector<Rat> c_;
};

// (a + u)^e truncated at `order`, via the binomial theorem.
inline Jet jet_linear_pow(const Rat& a, unsigned long e, size_t order) {
    Jet r(order);
    const size_t top = std::min<size_t>(order, e);
    // binom(e, i) * a^{e-i}
    Int bin = 1;
    Rat apow = rat_pow(a, static_cast<long>(e));
    if (a == 0) {
        if (e <= order) r[e] = 1;
        return r;
    }
    const Rat ainv = 1 / a;
    for (size_t i = 0; i <= top; ++i) {
        r[i] = Rat(bin) * apow;
        bin = exact_div(bin * Int(static_cast<long>(e - i)), Int(static_cast<long>(i + 1)));
        apow *= ainv;
    }
    return r;
}

} // namespace zetaforms

#endif
