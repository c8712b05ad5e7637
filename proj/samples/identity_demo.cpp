// Prints the first q-Euler numbers, checks the Frobenius-Euler link for
// them, and shows the k = 0 Bernstein moment discrepancy.

#include "qeuler/bernstein.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/io.hpp"

#include <iostream>

int main() {
    using namespace qeuler;

    const auto e = q_euler_numbers(5);
    const auto h = frobenius_numbers(minus_q_inverse(), 5);
    for (std::size_t n = 0; n < e.size(); ++n)
        std::cout << "E_" << n << " = " << pretty(e[n]) << (e[n] == h[n] ? "  (= H_n(-1/q))" : "  (!)") << '\n';

    std::cout << "\nE_3 at q = 1: " << e[3].eval(BigRat(1)) << '\n';

    const QRatFn lhs = bernstein_moment_lhs(0, 1);
    std::cout << "\nmoment of 1 - x:          " << pretty(lhs) << '\n'
              << "with 1 + q kept:          " << pretty(bernstein_moment_rhs(0, 1, MomentForm::full)) << '\n'
              << "with 1 + q dropped (k=0): " << pretty(bernstein_moment_rhs(0, 1, MomentForm::reduced)) << '\n';
}
