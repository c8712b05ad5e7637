#pragma once

// Dense univariate polynomials with coefficients in a commutative ring T.
//
// Coefficients are stored in ascending order of degree with no trailing
// zeros, so the zero polynomial is the empty vector and equality is
// structural. Division and gcd additionally need T to be a field.
//
// T must provide: T{} == 0, T(1), +, -, *, and an is_zero(const T&)
// overload visible at instantiation.

#include "qeuler/bigrat.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qeuler {

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
    return is_zero(v);
}
} // namespace detail

template <class T>
class Poly {
public:
    using coeff_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }

    /// value * x^k
    static Poly monomial(T value, std::size_t k) {
        std::vector<T> c(k + 1);
        c[k] = std::move(value);
        return Poly(std::move(c));
    }

    static Poly one() { return constant(T(1)); }
    static Poly x() { return monomial(T(1), 1); }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of x^k; zero past the degree.
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T{}; }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator-() const {
        std::vector<T> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.size() && i < b.size())
                c[i] = a.c_[i] + b.c_[i];
            else
                c[i] = i < a.size() ? a.c_[i] : b.c_[i];
        }
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (qeuler_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.c_[i] * s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    /// Multiply by x^k.
    Poly shift_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> c(k);
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    /// Coefficients in reverse order, i.e. x^deg p(1/x).
    Poly reversed() const { return Poly(std::vector<T>(c_.rbegin(), c_.rend())); }

    /// Number of factors x dividing p (0 for the zero polynomial).
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < c_.size() && qeuler_is_zero(c_[k])) ++k;
        return k == c_.size() ? 0 : k;
    }

    /// Horner evaluation at any value a T can be multiplied into.
    template <class U>
    U eval(const U& at) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
        return acc;
    }

    /// p(a + b x).
    Poly compose_affine(const T& a, const T& b) const {
        const Poly lin{a, b};
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
        return acc;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> Poly<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(f(v));
        return Poly<U>(std::move(c));
    }

    /// Quotient and remainder; T must be a field.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<T> rem = a.c_;
        std::vector<T> quot(a.size() - b.size() + 1);
        const T inv_lead = T(1) / b.leading();
        for (std::size_t i = quot.size(); i-- > 0;) {
            T f = rem[i + b.size() - 1] * inv_lead;
            if (qeuler_is_zero(f)) continue;
            for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= f * b.c_[j];
            quot[i] = std::move(f);
        }
        rem.resize(b.size() - 1);
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    /// a / b when b divides a exactly.
    friend Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * (T(1) / leading());
    }

private:
    static bool qeuler_is_zero(const T& v) { return detail::coeff_is_zero(v); }

    void trim() {
        while (!c_.empty() && qeuler_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return Poly<T>::one();
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

using QPoly = Poly<BigRat>;

} // namespace qeuler
