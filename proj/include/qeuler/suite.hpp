#pragma once

// Named verification suites: each bundles the identity reports the CLI
// `verify --suite <name>` command runs.

#include "qeuler/bernstein.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identity.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

inline constexpr std::array<std::string_view, 13> suite_names{
    "all", "thm1", "thm2", "cor3", "thm4", "thm5", "thm6", "thm7", "thm8", "classical", "erratum", "weighted", "k0-remark"};

inline bool is_suite_name(std::string_view s) {
    return std::find(suite_names.begin(), suite_names.end(), s) != suite_names.end();
}

struct SuiteResult {
    std::string suite;
    long n_max;
    std::vector<IdentityReport> reports;

    /// True iff every instance matched its expected verdict.
    bool ok() const {
        return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_as_expected(); });
    }
};

/// Check any identity. The Bernstein identities take n_max from the range.
inline IdentityReport verify_identity(IdentityId id, const IdentityRange& range) {
    const auto n_max = static_cast<std::size_t>(std::max(range.n_max, 0L));
    switch (id) {
    case IdentityId::bernstein_moments: return verify_theorem8(n_max).theorem;
    case IdentityId::bernstein_k0_remark: return verify_theorem8(n_max).k0_remark;
    default: return verify_euler_identity(id, range);
    }
}

/// Run a named suite with every index bounded by n_max.
inline SuiteResult run_suite(std::string_view name, long n_max) {
    if (!is_suite_name(name)) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    SuiteResult out{std::string(name), n_max, {}};
    IdentityRange range;
    range.n_max = n_max;
    range.m_max = n_max;

    auto euler = [&](IdentityId id) { out.reports.push_back(verify_euler_identity(id, range)); };
    auto bernstein = [&](bool theorem, bool erratum) {
        auto v = verify_theorem8(static_cast<std::size_t>(std::max(n_max, 0L)));
        if (theorem) out.reports.push_back(std::move(v.theorem));
        if (erratum) {
            out.reports.push_back(std::move(v.k0_remark));
            out.reports.push_back(std::move(v.k0_full));
        }
    };

    if (name == "all") {
        for (auto id : {IdentityId::frobenius_numbers, IdentityId::frobenius_polynomials, IdentityId::odd_shift_sum,
                        IdentityId::unit_shift, IdentityId::double_shift, IdentityId::reflection,
                        IdentityId::reflected_moment, IdentityId::classical_limit})
            euler(id);
        bernstein(true, true);
    } else if (name == "erratum" || name == "k0-remark") {
        bernstein(false, true);
    } else if (name == "thm8") {
        bernstein(true, false);
    } else {
        const auto id = identity_from_tag(name);
        euler(*id);
    }
    return out;
}

} // namespace qeuler
