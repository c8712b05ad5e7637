#pragma once

// q-Euler numbers and polynomials with weight 0, their weighted variants,
// Frobenius-Euler numbers and polynomials, and symbolic checks of the
// identities relating them.
//
// Notation: E~_{n,q} is the n-th q-Euler number with weight 0, the n-th
// moment of the fermionic measure mu_{-q}. It is determined by
//   E~_0 = 1,   q (E~ + 1)^n + E~_n = 0   (n >= 1)
// with the umbral convention E~^k -> E~_k. The Frobenius-Euler numbers
// H_n(u) are the coefficients of (1 - u) / (e^t - u).

#include "qeuler/bigrat.hpp"
#include "qeuler/binomial.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/qratfn.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

/// Parameter value that makes a recurrence singular (Frobenius u = 1).
class singular_parameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Entry n is E~_{n,q}.
struct QEulerSeq {
    std::vector<QRatFn> entries;
    const QRatFn& operator[](std::size_t n) const { return entries.at(n); }
    std::size_t size() const { return entries.size(); }
};

/// Entry n is H_n(u).
struct FrobeniusSeq {
    QRatFn u;
    std::vector<QRatFn> entries;
    const QRatFn& operator[](std::size_t n) const { return entries.at(n); }
    std::size_t size() const { return entries.size(); }
};

/// Memo of sequence prefixes keyed by (kind, parameter). Extension runs under
/// the lock, so every prefix is computed once and readers never see a
/// partially grown vector.
class SequenceCache {
public:
    using Extender = std::function<void(std::vector<QRatFn>&, std::size_t)>;

    static SequenceCache& instance() {
        static SequenceCache cache;
        return cache;
    }

    /// Entries 0..n_max for `key`, growing the stored prefix with `extend`
    /// (which appends until size() == n_max + 1).
    std::vector<QRatFn> get(const std::string& key, std::size_t n_max, const Extender& extend) {
        std::lock_guard lock(mutex_);
        auto& seq = store_[key];
        if (seq.size() <= n_max) extend(seq, n_max);
        return {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
    }

    /// Install a precomputed prefix (e.g. loaded from disk) if it is longer.
    void seed(const std::string& key, std::vector<QRatFn> entries) {
        std::lock_guard lock(mutex_);
        auto& seq = store_[key];
        if (entries.size() > seq.size()) seq = std::move(entries);
    }

    std::size_t cached_size(const std::string& key) const {
        std::lock_guard lock(mutex_);
        auto it = store_.find(key);
        return it == store_.end() ? 0 : it->second.size();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        store_.clear();
    }

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::vector<QRatFn>> store_;
};

inline const std::string qeuler_cache_key = "qeuler";

inline std::string frobenius_cache_key(const QRatFn& u) {
    std::string key = "frobenius:";
    for (const auto& c : u.num().coeffs()) key += to_string(c) + ",";
    key += "/";
    for (const auto& c : u.den().coeffs()) key += to_string(c) + ",";
    return key;
}

inline std::string weighted_cache_key(unsigned alpha) { return "weighted:" + std::to_string(alpha); }

/// q^n as a rational function.
inline QRatFn qpow(std::size_t n) { return q_power(static_cast<long>(n)); }

/// [2]_q = 1 + q.
inline QRatFn two_q() { return QRatFn(q_integer(2)); }

// ---------------------------------------------------------------------------
// Sequences

/// Weighted q-Euler numbers from the defining recurrence
///   (1 + q^{alpha n + 1}) E_n = -q sum_{k<n} C(n,k) q^{alpha k} E_k.
/// alpha = 0 gives the weight-0 numbers.
inline std::vector<QRatFn> q_euler_numbers_weighted_recurrence(unsigned alpha, std::size_t n_max) {
    return SequenceCache::instance().get(
        weighted_cache_key(alpha), n_max, [alpha](std::vector<QRatFn>& e, std::size_t upto) {
            if (e.empty()) e.emplace_back(1);
            const QRatFn q = QRatFn::q();
            for (std::size_t n = e.size(); n <= upto; ++n) {
                QRatFn sum;
                for (std::size_t k = 0; k < n; ++k)
                    sum += QRatFn(BigRat(binomial(n, k))) * qpow(alpha * k) * e[k];
                const QRatFn lead = QRatFn(1) + qpow(alpha * n + 1);
                e.push_back(-(q * sum) / lead);
            }
        });
}

/// E~_{0,q} .. E~_{n_max,q}.
inline QEulerSeq q_euler_numbers(std::size_t n_max) {
    return {SequenceCache::instance().get(qeuler_cache_key, n_max, [](std::vector<QRatFn>& e,
                                                                      std::size_t upto) {
        if (e.empty()) e.emplace_back(1);
        // (1 + q) E_n = -q sum_{k<n} C(n,k) E_k
        const QRatFn factor = -QRatFn::q() / two_q();
        for (std::size_t n = e.size(); n <= upto; ++n) {
            QRatFn sum;
            for (std::size_t k = 0; k < n; ++k) sum += QRatFn(BigRat(binomial(n, k))) * e[k];
            e.push_back(factor * sum);
        }
    })};
}

/// H_0(u) .. H_{n_max}(u) from (u - 1) H_n = sum_{k<n} C(n,k) H_k.
inline FrobeniusSeq frobenius_numbers(const QRatFn& u, std::size_t n_max) {
    if (u == QRatFn(1)) throw singular_parameter("Frobenius-Euler parameter u = 1 is singular");
    const QRatFn inv = (u - QRatFn(1)).inverse();
    auto entries = SequenceCache::instance().get(
        frobenius_cache_key(u), n_max, [&inv](std::vector<QRatFn>& h, std::size_t upto) {
            if (h.empty()) h.emplace_back(1);
            for (std::size_t n = h.size(); n <= upto; ++n) {
                QRatFn sum;
                for (std::size_t k = 0; k < n; ++k) sum += QRatFn(BigRat(binomial(n, k))) * h[k];
                h.push_back(sum * inv);
            }
        });
    return {u, std::move(entries)};
}

/// The parameter u = -1/q linking Frobenius-Euler and q-Euler numbers.
inline QRatFn minus_q_inverse() { return -q_power(-1); }

/// Weighted q-Euler numbers from the closed form
///   [2]_q / ((1-q)^n [alpha]_q^n) sum_{l=0}^n C(n,l) (-1)^l / (1 + q^{alpha l + 1}).
inline std::vector<QRatFn> q_euler_numbers_weighted_closed_form(unsigned alpha, std::size_t n_max) {
    if (alpha == 0) throw std::invalid_argument("closed form needs weight alpha >= 1");
    const QRatFn one_minus_q(QPoly{BigRat(1), BigRat(-1)});
    const QRatFn alpha_q(q_integer(alpha));
    const QRatFn scale = one_minus_q * alpha_q;
    std::vector<QRatFn> out;
    out.reserve(n_max + 1);
    QRatFn prefactor = two_q();
    for (std::size_t n = 0; n <= n_max; ++n) {
        QRatFn sum;
        for (std::size_t l = 0; l <= n; ++l) {
            QRatFn term = (QRatFn(1) + qpow(alpha * l + 1)).inverse() * QRatFn(BigRat(binomial(n, l)));
            sum += (l % 2 == 0) ? term : -term;
        }
        out.push_back(prefactor * sum);
        prefactor /= scale;
    }
    return out;
}

/// Weighted q-Euler numbers for integer alpha >= 1, computed by the closed
/// form and by the recurrence; throws std::logic_error if they disagree.
inline std::vector<QRatFn> q_euler_numbers_weighted(long alpha, std::size_t n_max) {
    if (alpha <= 0) throw std::invalid_argument("weight alpha must be a positive integer");
    auto rec = q_euler_numbers_weighted_recurrence(static_cast<unsigned>(alpha), n_max);
    auto closed = q_euler_numbers_weighted_closed_form(static_cast<unsigned>(alpha), n_max);
    for (std::size_t n = 0; n <= n_max; ++n)
        if (!(rec[n] == closed[n]))
            throw std::logic_error("weighted q-Euler closed form disagrees with recurrence at n = " +
                                   std::to_string(n));
    return rec;
}

/// Classical Euler numbers E_n from (E + 1)^n + E_n = 0, E_0 = 1.
inline std::vector<BigRat> classical_euler_numbers(std::size_t n_max) {
    std::vector<BigRat> e{BigRat(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigRat sum = 0;
        for (std::size_t k = 0; k < n; ++k) sum += BigRat(binomial(n, k)) * e[k];
        e.push_back(-sum / 2);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Polynomials

/// sum_l C(n,l) a_l x^{n-l} for a sequence a (the umbral power (x + a)^n).
inline XPoly umbral_power(const std::vector<QRatFn>& a, std::size_t n) {
    std::vector<QRatFn> coeffs(n + 1);
    for (std::size_t l = 0; l <= n; ++l) coeffs[n - l] = QRatFn(BigRat(binomial(n, l))) * a.at(l);
    return XPoly(std::move(coeffs));
}

/// E~_{n,q}(x) = (x + E~_q)^n.
inline XPoly q_euler_polynomial(std::size_t n) { return umbral_power(q_euler_numbers(n).entries, n); }

/// H_n(u, x) = sum_l C(n,l) H_l(u) x^{n-l}.
inline XPoly frobenius_polynomial(const QRatFn& u, std::size_t n) {
    return umbral_power(frobenius_numbers(u, n).entries, n);
}

/// p(c) for an integer point c.
inline QRatFn eval_at(const XPoly& p, long c) { return p.eval(QRatFn(c)); }

// ---------------------------------------------------------------------------
// Identity checks

struct IdentityRange {
    /// Upper bound for the main index n (inclusive).
    long n_max = 20;
    /// Upper bound for the secondary index (m for the odd-shift sum).
    long m_max = 15;
    /// Weights for the weighted closed-form check.
    std::vector<unsigned> alphas{1, 2, 3};
};

namespace detail {

inline IdentityReport check_frobenius_numbers(const IdentityRange& r) {
    IdentityReport rep{IdentityId::frobenius_numbers, {}, {}};
    if (r.n_max < 0) return rep;
    const auto n_max = static_cast<std::size_t>(r.n_max);
    const auto e = q_euler_numbers(n_max);
    const auto h = frobenius_numbers(minus_q_inverse(), n_max);
    for (std::size_t n = 0; n <= n_max; ++n)
        rep.instances.push_back(compare_sides({{"n", static_cast<long>(n)}}, e[n], h[n]));
    return rep;
}

inline IdentityReport check_frobenius_polynomials(const IdentityRange& r) {
    IdentityReport rep{IdentityId::frobenius_polynomials, {}, {}};
    for (long n = 0; n <= r.n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        rep.instances.push_back(compare_sides({{"n", n}}, q_euler_polynomial(un),
                                              frobenius_polynomial(minus_q_inverse(), un)));
    }
    return rep;
}

inline IdentityReport check_odd_shift_sum(const IdentityRange& r) {
    IdentityReport rep{IdentityId::odd_shift_sum, {}, {}};
    rep.notes.push_back("n ranges over odd values only");
    const QRatFn u = minus_q_inverse();
    for (long n = 1; n <= r.n_max; n += 2) {
        for (long m = 0; m <= r.m_max; ++m) {
            const auto um = static_cast<std::size_t>(m);
            const QRatFn left = qpow(static_cast<std::size_t>(n)) * eval_at(frobenius_polynomial(u, um), n) +
                                frobenius_numbers(u, um)[um];
            // [2]_q sum_{l<n} (-1)^l l^m q^l with 0^0 = 1
            QPoly sum;
            for (long l = 0; l < n; ++l) {
                BigRat c = pow(BigRat(l), static_cast<unsigned>(m));
                if (l % 2 == 1) c = -c;
                sum += QPoly::monomial(c, static_cast<std::size_t>(l));
            }
            const QRatFn right = two_q() * QRatFn(sum);
            rep.instances.push_back(compare_sides({{"n", n}, {"m", m}}, left, right));
        }
    }
    return rep;
}

inline IdentityReport check_unit_shift(const IdentityRange& r) {
    IdentityReport rep{IdentityId::unit_shift, {}, {}};
    for (long n = 0; n <= r.n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const QRatFn left = QRatFn::q() * eval_at(q_euler_polynomial(un), 1) + q_euler_numbers(un)[un];
        const QRatFn right = n == 0 ? two_q() : QRatFn();
        rep.instances.push_back(compare_sides({{"n", n}}, left, right));
    }
    return rep;
}

inline IdentityInstance double_shift_instance(long n, bool expected) {
    const auto un = static_cast<std::size_t>(n);
    const QRatFn left = qpow(2) * eval_at(q_euler_polynomial(un), 2);
    const QRatFn right = QRatFn::q() + qpow(2) + q_euler_numbers(un)[un];
    return compare_sides({{"n", n}}, left, right, expected);
}

inline IdentityReport check_double_shift(const IdentityRange& r) {
    IdentityReport rep{IdentityId::double_shift, {}, {}};
    rep.notes.push_back("n = 0 excluded: the identity requires n >= 1; n = 0 is probed as an expected failure");
    auto probe = double_shift_instance(0, false);
    probe.note = "hypothesis probe";
    rep.instances.push_back(std::move(probe));
    for (long n = 1; n <= r.n_max; ++n) rep.instances.push_back(double_shift_instance(n, true));
    return rep;
}

inline IdentityReport check_reflection(const IdentityRange& r) {
    IdentityReport rep{IdentityId::reflection, {}, {}};
    for (long n = 0; n <= r.n_max; ++n) {
        const XPoly p = q_euler_polynomial(static_cast<std::size_t>(n));
        const XPoly left = subst_q_inverse(p).compose_affine(QRatFn(1), QRatFn(-1));
        const XPoly right = n % 2 == 0 ? p : -p;
        rep.instances.push_back(compare_sides({{"n", n}}, left, right));
    }
    return rep;
}

/// sum_k C(n,k) (-1)^k E~_{k,q}, the moment of (1 - x)^n.
inline QRatFn reflected_moment(std::size_t n) {
    const auto e = q_euler_numbers(n);
    QRatFn sum;
    for (std::size_t k = 0; k <= n; ++k) {
        const QRatFn term = QRatFn(BigRat(binomial(n, k))) * e[k];
        sum += k % 2 == 0 ? term : -term;
    }
    return sum;
}

inline IdentityReport check_reflected_moment(const IdentityRange& r) {
    IdentityReport rep{IdentityId::reflected_moment, {}, {}};
    rep.notes.push_back("n = 0 excluded: the identity requires n >= 1");
    for (long n = 1; n <= r.n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const QRatFn right = two_q() + qpow(2) * subst_q_inverse(q_euler_numbers(un)[un]);
        rep.instances.push_back(compare_sides({{"n", n}}, reflected_moment(un), right));
    }
    return rep;
}

inline IdentityReport check_classical_limit(const IdentityRange& r) {
    IdentityReport rep{IdentityId::classical_limit, {}, {}};
    if (r.n_max < 0) return rep;
    const auto n_max = static_cast<std::size_t>(r.n_max);
    const auto e = q_euler_numbers(n_max);
    const auto classical = classical_euler_numbers(n_max);
    for (std::size_t n = 0; n <= n_max; ++n)
        rep.instances.push_back(compare_sides({{"n", static_cast<long>(n)}}, QRatFn(e[n].eval(BigRat(1))),
                                              QRatFn(classical[n])));
    return rep;
}

inline IdentityReport check_weighted_closed_form(const IdentityRange& r) {
    IdentityReport rep{IdentityId::weighted_closed_form, {}, {}};
    if (r.n_max < 0) return rep;
    const auto n_max = static_cast<std::size_t>(r.n_max);
    for (unsigned alpha : r.alphas) {
        const auto rec = q_euler_numbers_weighted_recurrence(alpha, n_max);
        const auto closed = q_euler_numbers_weighted_closed_form(alpha, n_max);
        for (std::size_t n = 0; n <= n_max; ++n)
            rep.instances.push_back(
                compare_sides({{"alpha", static_cast<long>(alpha)}, {"n", static_cast<long>(n)}}, closed[n], rec[n]));
    }
    return rep;
}

} // namespace detail

/// Check one of the q-Euler identities over the given range. The Bernstein
/// identities live in bernstein.hpp; suite.hpp dispatches over all of them.
inline IdentityReport verify_euler_identity(IdentityId id, const IdentityRange& range) {
    switch (id) {
    case IdentityId::frobenius_numbers: return detail::check_frobenius_numbers(range);
    case IdentityId::frobenius_polynomials: return detail::check_frobenius_polynomials(range);
    case IdentityId::odd_shift_sum: return detail::check_odd_shift_sum(range);
    case IdentityId::unit_shift: return detail::check_unit_shift(range);
    case IdentityId::double_shift: return detail::check_double_shift(range);
    case IdentityId::reflection: return detail::check_reflection(range);
    case IdentityId::reflected_moment: return detail::check_reflected_moment(range);
    case IdentityId::classical_limit: return detail::check_classical_limit(range);
    case IdentityId::weighted_closed_form: return detail::check_weighted_closed_form(range);
    default: break;
    }
    throw std::invalid_argument("not a q-Euler identity: " + std::string(tag(id)));
}

} // namespace qeuler
