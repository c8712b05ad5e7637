#pragma once

// Finite-precision p-adic numbers and the truncated fermionic p-adic
// q-integral
//
//   I_N(f) = [2]_q / (1 + q^{p^N}) * sum_{x=0}^{p^N - 1} f(x) (-q)^x,
//
// whose limit N -> infinity is the integral of f against mu_{-q}.

#include "qeuler/bigrat.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/poly.hpp"
#include "qeuler/qratfn.hpp"

#include <algorithm>
#include <climits>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeuler {

class prime_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_odd_prime(long p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

inline BigInt ipow(long base, long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

/// v_p(n) for n != 0.
inline long p_valuation(BigInt n, long p) {
    long v = 0;
    const BigInt bp = p;
    while (n % bp == 0) {
        n /= bp;
        ++v;
    }
    return v;
}

/// An element of Q_p known modulo p^K (absolute precision K).
///
/// A nonzero value is p^v * u with p not dividing u, and u stored as a
/// residue mod p^{K - v}; v < K always. A value that is 0 mod p^K is
/// "indistinguishable from zero" and carries v = K. A precision K <= 0 with
/// a zero value means every significant digit has been lost.
class PAdicNum {
public:
    PAdicNum(long p, long precision) : p_(p), prec_(precision), val_(precision), unit_(0) {}

    static PAdicNum zero(long p, long precision) { return PAdicNum(p, precision); }

    static PAdicNum from_integer(const BigInt& n, long p, long precision) {
        return from_rational(BigRat(n), p, precision);
    }

    /// The canonical expansion of r known mod p^K.
    static PAdicNum from_rational(const BigRat& r, long p, long precision) {
        require_odd_prime(p);
        if (sgn(r) == 0) return zero(p, precision);
        const BigInt num = r.get_num();
        const BigInt den = r.get_den();
        const long vn = p_valuation(num, p);
        const long vd = p_valuation(den, p);
        const long v = vn - vd;
        if (v >= precision) return zero(p, precision);
        const BigInt bp = p;
        BigInt un = num, ud = den;
        for (long i = 0; i < vn; ++i) un /= bp;
        for (long i = 0; i < vd; ++i) ud /= bp;
        return PAdicNum(p, precision, v, un * inverse_mod(ud, ipow(p, precision - v)));
    }

    long p() const { return p_; }
    /// Absolute precision K: the value is known mod p^K.
    long precision() const { return prec_; }
    /// v_p of the value; equals precision() for zero.
    long valuation() const { return val_; }
    /// Digits of the unit part that are known.
    long relative_precision() const { return prec_ - val_; }
    const BigInt& unit() const { return unit_; }
    bool is_zero() const { return unit_ == 0; }
    bool significance_lost() const { return is_zero() && prec_ <= 0; }

    /// Value as an integer in [0, p^K) when v >= 0.
    BigInt residue() const {
        if (val_ < 0) throw std::domain_error("p-adic value has negative valuation");
        if (is_zero()) return 0;
        return unit_ * ipow(p_, val_);
    }

    /// Same value known to a lower absolute precision.
    PAdicNum reduced_to(long precision) const {
        if (precision >= prec_) return *this;
        if (is_zero() || val_ >= precision) return zero(p_, precision);
        return PAdicNum(p_, precision, val_, unit_);
    }

    /// Equal as elements of Z/p^K for K the smaller precision.
    bool congruent(const PAdicNum& o) const { return (*this - o).is_zero(); }

    friend bool operator==(const PAdicNum&, const PAdicNum&) = default;

    PAdicNum operator-() const {
        if (is_zero()) return *this;
        return PAdicNum(p_, prec_, val_, -unit_);
    }

    friend PAdicNum operator+(const PAdicNum& a, const PAdicNum& b) {
        check_same_prime(a, b);
        const long prec = std::min(a.prec_, b.prec_);
        if (a.is_zero()) return b.reduced_to(prec);
        if (b.is_zero()) return a.reduced_to(prec);
        const long v = std::min(a.val_, b.val_);
        if (v >= prec) return zero(a.p_, prec);
        BigInt sum = a.unit_ * ipow(a.p_, a.val_ - v) + b.unit_ * ipow(b.p_, b.val_ - v);
        return normalize(a.p_, prec, v, std::move(sum));
    }

    friend PAdicNum operator-(const PAdicNum& a, const PAdicNum& b) { return a + (-b); }

    friend PAdicNum operator*(const PAdicNum& a, const PAdicNum& b) {
        check_same_prime(a, b);
        if (a.is_zero() && b.is_zero()) return zero(a.p_, saturating_add(a.prec_, b.prec_));
        if (a.is_zero()) return zero(a.p_, a.prec_ + b.val_);
        if (b.is_zero()) return zero(a.p_, b.prec_ + a.val_);
        const long v = a.val_ + b.val_;
        const long rel = std::min(a.relative_precision(), b.relative_precision());
        return PAdicNum(a.p_, v + rel, v, a.unit_ * b.unit_);
    }

    friend PAdicNum operator/(const PAdicNum& a, const PAdicNum& b) {
        check_same_prime(a, b);
        if (b.is_zero()) throw division_by_zero("p-adic division by a value indistinguishable from zero");
        if (a.is_zero()) return zero(a.p_, a.prec_ - b.val_);
        const long v = a.val_ - b.val_;
        const long rel = std::min(a.relative_precision(), b.relative_precision());
        return PAdicNum(a.p_, v + rel, v, a.unit_ * inverse_mod(b.unit_, ipow(a.p_, rel)));
    }

    PAdicNum& operator+=(const PAdicNum& b) { return *this = *this + b; }
    PAdicNum& operator-=(const PAdicNum& b) { return *this = *this - b; }
    PAdicNum& operator*=(const PAdicNum& b) { return *this = *this * b; }
    PAdicNum& operator/=(const PAdicNum& b) { return *this = *this / b; }

    PAdicNum pow(BigInt e) const {
        PAdicNum result = from_integer(1, p_, prec_);
        PAdicNum base = *this;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    std::string to_string() const {
        if (is_zero()) return "O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
        return std::to_string(p_) + "^" + std::to_string(val_) + "*" + unit_.get_str() + " + O(" +
               std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    }

private:
    PAdicNum(long p, long precision, long v, BigInt unit) : p_(p), prec_(precision), val_(v) {
        const BigInt mod = ipow(p, precision - v);
        unit_ = unit % mod;
        if (unit_ < 0) unit_ += mod;
    }

    static long saturating_add(long a, long b) {
        if (b > 0 && a > LONG_MAX - b) return LONG_MAX;
        return a + b;
    }

    static BigInt inverse_mod(const BigInt& a, const BigInt& m) {
        BigInt r;
        if (m == 1) return 0;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("not invertible modulo p^k");
        return r;
    }

    /// p^v * n known mod p^prec, with n possibly divisible by p.
    static PAdicNum normalize(long p, long prec, long v, BigInt n) {
        n %= ipow(p, prec - v);
        if (n == 0) return zero(p, prec);
        const long extra = p_valuation(n, p);
        for (long i = 0; i < extra; ++i) n /= p;
        return PAdicNum(p, prec, v + extra, std::move(n));
    }

    static void check_same_prime(const PAdicNum& a, const PAdicNum& b) {
        if (a.p_ != b.p_)
            throw prime_mismatch("p-adic operands use different primes (" + std::to_string(a.p_) + " vs " +
                                 std::to_string(b.p_) + ")");
    }

    long p_;
    long prec_;
    long val_;
    BigInt unit_;
};

inline PAdicNum from_rational(const BigRat& r, long p, long precision) {
    return PAdicNum::from_rational(r, p, precision);
}

inline PAdicNum padic_arith(const PAdicNum& a, const PAdicNum& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

/// An admissible q for mu_{-q}: a rational q with v_p(1 - q) >= 1.
struct QChoice {
    long p;
    BigRat q;

    QChoice(long prime, BigRat value) : p(prime), q(std::move(value)) {
        require_odd_prime(p);
        const BigRat d = 1 - q;
        if (!is_zero(d) && (p_valuation(d.get_num(), p) - p_valuation(d.get_den(), p)) < 1)
            throw std::invalid_argument("q must satisfy |1 - q|_p < 1");
        if (p_valuation(q.get_den(), p) > 0) throw std::invalid_argument("q must be a p-adic integer");
    }

    /// q = 1 + offset * p.
    static QChoice one_plus(long p, long offset) { return QChoice(p, BigRat(1 + offset * p)); }

    PAdicNum padic(long precision) const { return from_rational(q, p, precision); }
};

/// Guard digits carried while summing.
inline constexpr long guard_digits = 4;

/// Default absolute precision for experiments.
inline constexpr long default_precision = 12;

/// I_N(f) known mod p^K. The returned value may report significance_lost()
/// when f has coefficients with large negative valuation.
inline PAdicNum fermionic_integral_partial(const QPoly& f, const QChoice& qc, long level, long precision) {
    if (level < 1) throw std::invalid_argument("level N must be positive");
    const long p = qc.p;
    const long work = precision + guard_digits;
    const BigInt count = ipow(p, level);

    std::vector<PAdicNum> coeffs;
    coeffs.reserve(f.size());
    for (const auto& c : f.coeffs()) coeffs.push_back(from_rational(c, p, work));

    const PAdicNum q = qc.padic(work);
    const PAdicNum minus_q = -q;
    PAdicNum weight = PAdicNum::from_integer(1, p, work);
    PAdicNum sum = PAdicNum::zero(p, work);
    for (BigInt x = 0; x < count; ++x) {
        const PAdicNum px = PAdicNum::from_integer(x, p, work);
        PAdicNum fx = PAdicNum::zero(p, work);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) fx = fx * px + *it;
        sum += fx * weight;
        weight *= minus_q;
    }
    const PAdicNum one = PAdicNum::from_integer(1, p, work);
    const PAdicNum prefactor = (one + q) / (one + q.pow(count));
    return (prefactor * sum).reduced_to(precision);
}

/// E~_{n,q} evaluated at the rational q of qc and embedded in Q_p.
inline PAdicNum exact_moment(std::size_t n, const QChoice& qc, long precision) {
    return from_rational(q_euler_numbers(n)[n].eval(qc.q), qc.p, precision);
}

struct ConvergencePoint {
    long level;
    /// v_p(I_N - exact); equals the precision when the defect vanishes.
    long valuation;
    bool exact;
    friend bool operator==(const ConvergencePoint&, const ConvergencePoint&) = default;
};

/// v_p(I_N(x^n) - E~_{n,q}) for each N in levels.
inline std::vector<ConvergencePoint> convergence_report(std::size_t n, const QChoice& qc, long precision,
                                                        const std::vector<long>& levels) {
    const PAdicNum target = exact_moment(n, qc, precision);
    const QPoly f = QPoly::monomial(BigRat(1), n);
    std::vector<ConvergencePoint> out;
    for (long level : levels) {
        const PAdicNum defect = fermionic_integral_partial(f, qc, level, precision) - target;
        out.push_back({level, defect.valuation(), defect.is_zero()});
    }
    return out;
}

/// The convergence signal: valuations are nondecreasing in N and gain at
/// least min_gain from first to last, unless the defect already vanishes
/// at precision on the first level.
inline bool shows_convergence(const std::vector<ConvergencePoint>& report, long min_gain = 2) {
    if (report.empty()) return false;
    for (std::size_t i = 1; i < report.size(); ++i)
        if (report[i].valuation < report[i - 1].valuation) return false;
    if (report.front().exact) return std::all_of(report.begin(), report.end(), [](auto& c) { return c.exact; });
    return report.back().valuation - report.front().valuation >= min_gain;
}

struct ShiftCheck {
    long n;
    long level;
    long defect_valuation;
    bool exact;
};

/// q^n I(f(x + n)) + (-1)^{n-1} I(f) - [2]_q sum_{l<n} (-1)^{n-1-l} f(l) q^l at level N.
inline ShiftCheck check_shift_identity_finite(const QPoly& f, long n, const QChoice& qc, long precision,
                                              long level) {
    if (n < 1) throw std::invalid_argument("shift n must be positive");
    const long p = qc.p;
    const PAdicNum q = qc.padic(precision + guard_digits);
    const QPoly shifted = f.compose_affine(BigRat(n), BigRat(1));
    PAdicNum lhs = q.pow(n) * fermionic_integral_partial(shifted, qc, level, precision);
    const PAdicNum plain = fermionic_integral_partial(f, qc, level, precision);
    lhs += (n % 2 == 1) ? plain : -plain;

    const PAdicNum one = PAdicNum::from_integer(1, p, precision + guard_digits);
    PAdicNum rhs = PAdicNum::zero(p, precision + guard_digits);
    for (long l = 0; l < n; ++l) {
        PAdicNum term = from_rational(f.eval(BigRat(l)), p, precision + guard_digits) * q.pow(l);
        rhs += ((n - 1 - l) % 2 == 0) ? term : -term;
    }
    rhs *= one + q;
    const PAdicNum defect = (lhs - rhs).reduced_to(precision);
    return {n, level, defect.valuation(), defect.is_zero()};
}

} // namespace qeuler
