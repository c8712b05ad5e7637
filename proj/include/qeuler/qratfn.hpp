#pragma once

// The field Q(q) of rational functions in one indeterminate q.
//
// Every QRatFn is kept in canonical form: gcd(num, den) = 1 and den monic.
// Two equal field elements therefore have identical representations, and
// operator== is a structural comparison.

#include "qeuler/bigrat.hpp"
#include "qeuler/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qeuler {

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation of a rational function at one of its poles.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const BigRat& at)
        : std::domain_error("rational function has a pole at q = " + to_string(at)), pole_(at) {}
    const BigRat& pole() const { return pole_; }

private:
    BigRat pole_;
};

class QRatFn {
public:
    QRatFn() : den_(QPoly::one()) {}
    QRatFn(long c) : QRatFn(BigRat(c)) {}
    QRatFn(const BigRat& c) : num_(QPoly::constant(c)), den_(QPoly::one()) {}
    explicit QRatFn(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}
    QRatFn(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    /// The indeterminate q.
    static QRatFn q() { return QRatFn(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend bool operator==(const QRatFn&, const QRatFn&) = default;

    QRatFn operator-() const { return from_canonical(-num_, den_); }

    friend QRatFn operator+(const QRatFn& a, const QRatFn& b) { return add(a, b); }
    friend QRatFn operator-(const QRatFn& a, const QRatFn& b) { return add(a, -b); }

    friend QRatFn operator*(const QRatFn& a, const QRatFn& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.degree() == 0 && b.den_.degree() == 0) return from_canonical(a.num_ * b.num_, a.den_);
        // cross-cancel before multiplying so the product is already reduced
        const QPoly g1 = gcd(a.num_, b.den_);
        const QPoly g2 = gcd(b.num_, a.den_);
        QPoly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
        QPoly den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
        return normalized(std::move(num), std::move(den));
    }

    friend QRatFn operator/(const QRatFn& a, const QRatFn& b) { return a * b.inverse(); }

    QRatFn& operator+=(const QRatFn& b) { return *this = *this + b; }
    QRatFn& operator-=(const QRatFn& b) { return *this = *this - b; }
    QRatFn& operator*=(const QRatFn& b) { return *this = *this * b; }
    QRatFn& operator/=(const QRatFn& b) { return *this = *this / b; }

    QRatFn inverse() const {
        if (is_zero()) throw division_by_zero("division by the zero rational function");
        return normalized(den_, num_);
    }

    /// Exact value at q = at.
    BigRat eval(const BigRat& at) const {
        const BigRat d = den_.eval(at);
        if (qeuler::is_zero(d)) throw pole_error(at);
        return num_.eval(at) / d;
    }

    /// f(1/q), again as a canonical rational function.
    QRatFn subst_inverse() const {
        if (is_zero()) return {};
        // N(1/q) / D(1/q) = rev(N) q^{deg D} / (rev(D) q^{deg N})
        const long dn = num_.degree();
        const long dd = den_.degree();
        QPoly num = num_.reversed();
        QPoly den = den_.reversed();
        if (dd > dn)
            num = num.shift_up(static_cast<std::size_t>(dd - dn));
        else if (dn > dd)
            den = den.shift_up(static_cast<std::size_t>(dn - dd));
        return QRatFn(std::move(num), std::move(den));
    }

private:
    struct canonical_tag {};
    QRatFn(QPoly num, QPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    static QRatFn from_canonical(QPoly num, QPoly den) {
        return QRatFn(std::move(num), std::move(den), canonical_tag{});
    }

    /// Coprime inputs: only the leading coefficient of den needs fixing.
    static QRatFn normalized(QPoly num, QPoly den) {
        if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num.is_zero()) return {};
        const BigRat lead = den.leading();
        if (lead != 1) {
            const BigRat inv = 1 / lead;
            num = num * inv;
            den = den * inv;
        }
        return from_canonical(std::move(num), std::move(den));
    }

    static QRatFn add(const QRatFn& a, const QRatFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            QPoly num = a.num_ + b.num_;
            if (a.den_.degree() == 0) return from_canonical(std::move(num), a.den_);
            return QRatFn(std::move(num), a.den_);
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the sum
        const QPoly g = gcd(a.den_, b.den_);
        const QPoly bd = exact_div(a.den_, g);
        const QPoly dd = exact_div(b.den_, g);
        QPoly num = a.num_ * dd + b.num_ * bd;
        if (num.is_zero()) return {};
        const QPoly h = gcd(num, g);
        return normalized(exact_div(num, h), bd * exact_div(b.den_, h));
    }

    void canonicalize() {
        if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly::one();
            return;
        }
        const QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        *this = normalized(std::move(num_), std::move(den_));
    }

    QPoly num_;
    QPoly den_;
};

inline bool is_zero(const QRatFn& f) { return f.is_zero(); }

/// f(1/q).
inline QRatFn subst_q_inverse(const QRatFn& f) { return f.subst_inverse(); }

inline BigRat qratfn_eval(const QRatFn& f, const BigRat& at) { return f.eval(at); }

/// [x]_q = 1 + q + ... + q^{x-1}; the zero polynomial for x = 0.
inline QPoly q_integer(unsigned x) { return QPoly(std::vector<BigRat>(x, BigRat(1))); }

/// q^k as a rational function; k may be negative.
inline QRatFn q_power(long k) {
    if (k >= 0) return QRatFn(QPoly::monomial(BigRat(1), static_cast<std::size_t>(k)));
    return QRatFn(QPoly::one(), QPoly::monomial(BigRat(1), static_cast<std::size_t>(-k)));
}

inline QRatFn pow(const QRatFn& base, unsigned exp) {
    QRatFn result(1);
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

enum class ArithOp { add, sub, mul, div };

inline QRatFn qratfn_arith(const QRatFn& a, const QRatFn& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

/// Polynomial in x with coefficients in Q(q).
using XPoly = Poly<QRatFn>;

/// Lift a polynomial with rational coefficients into XPoly.
inline XPoly to_xpoly(const QPoly& p) {
    return p.map_coeffs([](const BigRat& c) { return QRatFn(c); });
}

/// Specialize every coefficient at q = at.
inline QPoly specialize_q(const XPoly& p, const BigRat& at) {
    return p.map_coeffs([&](const QRatFn& c) { return c.eval(at); });
}

/// Apply q -> 1/q to every coefficient.
inline XPoly subst_q_inverse(const XPoly& p) {
    return p.map_coeffs([](const QRatFn& c) { return c.subst_inverse(); });
}

} // namespace qeuler
