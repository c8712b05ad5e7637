#pragma once

// Bernstein basis polynomials B_{k,n}(x) = C(n,k) x^k (1-x)^{n-k}, the
// Bernstein operator, and their moments against mu_{-q}.
//
// The moment of B_{k,n} has two expansions:
//   lhs: C(n,k) sum_{l=0}^{n-k} C(n-k,l) (-1)^l E~_{k+l,q}
//   rhs: C(n,k) sum_{l=0}^{k}   C(k,l) (-1)^{k+l} (1 + q + q^2 E~_{n-l,1/q})
// The constant 1 + q cancels from rhs only when k >= 1, so the reduced form
// without it is valid for 1 <= k < n. Applying the reduced form at k = 0
// gives sum_l C(n,l) (-1)^l E~_l = q^2 E~_{n,1/q}, which does not hold.

#include "qeuler/bigrat.hpp"
#include "qeuler/binomial.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qratfn.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qeuler {

struct BernsteinBasis {
    std::size_t k;
    std::size_t n;
    QPoly poly;
};

/// C(n,k) x^k (1-x)^{n-k}, expanded.
inline BernsteinBasis bernstein_poly(std::size_t k, std::size_t n) {
    if (k > n) throw std::invalid_argument("Bernstein index k must not exceed degree n");
    const std::size_t m = n - k;
    std::vector<BigRat> c(n + 1);
    const BigInt scale = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    for (std::size_t j = 0; j <= m; ++j) {
        BigInt v = scale * binomial(static_cast<unsigned>(m), static_cast<unsigned>(j));
        c[k + j] = BigRat(j % 2 == 0 ? v : BigInt(-v));
    }
    return {k, n, QPoly(std::move(c))};
}

/// sum_k samples[k] B_{k,n}(x), where samples[k] = f(k/n).
inline BigRat bernstein_operator(std::span<const BigRat> samples, std::size_t n, const BigRat& x) {
    if (samples.size() != n + 1) throw std::invalid_argument("Bernstein operator needs n + 1 samples");
    BigRat acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += samples[k] * bernstein_poly(k, n).poly.eval(x);
    return acc;
}

enum class MomentForm {
    full,    ///< keeps the 1 + q terms
    reduced, ///< drops them; valid for k >= 1
};

/// C(n,k) sum_{l=0}^{n-k} C(n-k,l) (-1)^l E~_{k+l,q}.
inline QRatFn bernstein_moment_lhs(std::size_t k, std::size_t n) {
    if (k > n) throw std::invalid_argument("Bernstein index k must not exceed degree n");
    const auto e = q_euler_numbers(n);
    QRatFn sum;
    for (std::size_t l = 0; l <= n - k; ++l) {
        const QRatFn term = QRatFn(BigRat(binomial(static_cast<unsigned>(n - k), static_cast<unsigned>(l)))) * e[k + l];
        sum += l % 2 == 0 ? term : -term;
    }
    return QRatFn(BigRat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))) * sum;
}

/// C(n,k) sum_{l=0}^{k} C(k,l) (-1)^{k+l} ([1 + q +] q^2 E~_{n-l,1/q}), 0 <= k < n.
inline QRatFn bernstein_moment_rhs(std::size_t k, std::size_t n, MomentForm form) {
    if (k >= n) throw std::invalid_argument("Bernstein moment expansion requires k < n");
    const auto e = q_euler_numbers(n);
    const QRatFn q2 = qpow(2);
    QRatFn sum;
    for (std::size_t l = 0; l <= k; ++l) {
        QRatFn inner = q2 * subst_q_inverse(e[n - l]);
        if (form == MomentForm::full) inner += two_q();
        const QRatFn term = QRatFn(BigRat(binomial(static_cast<unsigned>(k), static_cast<unsigned>(l)))) * inner;
        sum += (k + l) % 2 == 0 ? term : -term;
    }
    return QRatFn(BigRat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))) * sum;
}

/// The moment of B_{k,n} computed straight from its expanded coefficients:
/// sum_j c_j E~_{j,q}.
inline QRatFn bernstein_moment_direct(std::size_t k, std::size_t n) {
    const auto basis = bernstein_poly(k, n);
    const auto e = q_euler_numbers(n);
    QRatFn sum;
    for (std::size_t j = 0; j < basis.poly.size(); ++j) sum += QRatFn(basis.poly[j]) * e[j];
    return sum;
}

struct BernsteinVerification {
    /// 1 <= k < n: lhs / C(n,k) against the reduced rhs / C(n,k).
    IdentityReport theorem;
    /// k = 0 with the reduced form, as printed; expected to fail.
    IdentityReport k0_remark;
    /// k = 0 with the full form (the reflected-moment identity); expected to hold.
    IdentityReport k0_full;

    bool all_as_expected() const {
        return theorem.all_as_expected() && k0_remark.all_as_expected() && k0_full.all_as_expected();
    }
};

inline BernsteinVerification verify_theorem8(std::size_t n_max) {
    BernsteinVerification out{{IdentityId::bernstein_moments, {}, {}},
                              {IdentityId::bernstein_k0_remark, {}, {}},
                              {IdentityId::reflected_moment, {}, {}}};
    out.k0_remark.notes.push_back("k = 0 with the 1 + q terms dropped; expected to fail");
    out.k0_full.notes.push_back("k = 0 with the 1 + q terms kept");
    for (std::size_t n = 1; n <= n_max; ++n) {
        const long ln = static_cast<long>(n);
        for (std::size_t k = 1; k < n; ++k) {
            const QRatFn c = QRatFn(BigRat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
            out.theorem.instances.push_back(compare_sides({{"n", ln}, {"k", static_cast<long>(k)}},
                                                          bernstein_moment_lhs(k, n) / c,
                                                          bernstein_moment_rhs(k, n, MomentForm::reduced) / c));
        }
        const QRatFn lhs0 = bernstein_moment_lhs(0, n);
        out.k0_remark.instances.push_back(
            compare_sides({{"n", ln}}, lhs0, bernstein_moment_rhs(0, n, MomentForm::reduced), false));
        out.k0_full.instances.push_back(
            compare_sides({{"n", ln}}, lhs0, bernstein_moment_rhs(0, n, MomentForm::full), true));
    }
    return out;
}

/// v_p of I_N(B_{k,n}) minus the exact moment evaluated at q and embedded.
inline PAdicNum bernstein_moment_padic_defect(std::size_t k, std::size_t n, const QChoice& qc, long precision,
                                              long level) {
    const PAdicNum approx = fermionic_integral_partial(bernstein_poly(k, n).poly, qc, level, precision);
    const PAdicNum exact = from_rational(bernstein_moment_lhs(k, n).eval(qc.q), qc.p, precision);
    return approx - exact;
}

} // namespace qeuler
