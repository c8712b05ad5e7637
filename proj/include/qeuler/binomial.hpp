#pragma once

#include "qeuler/bigrat.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace qeuler {

/// Pascal's triangle, grown on demand and shared by every caller.
class PascalTriangle {
public:
    static PascalTriangle& instance() {
        static PascalTriangle triangle;
        return triangle;
    }

    /// C(n, k); zero when k > n.
    BigInt operator()(unsigned n, unsigned k) {
        if (k > n) return 0;
        std::lock_guard lock(mutex_);
        grow(n);
        return rows_[n][k];
    }

private:
    PascalTriangle() { rows_.push_back({BigInt(1)}); }

    void grow(unsigned n) {
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::vector<BigInt> row(prev.size() + 1);
            row.front() = 1;
            row.back() = 1;
            for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

inline BigInt binomial(unsigned n, unsigned k) { return PascalTriangle::instance()(n, k); }

} // namespace qeuler
