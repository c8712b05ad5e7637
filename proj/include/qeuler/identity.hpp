#pragma once

// Machine-readable verdicts for identity checks.

#include "qeuler/qratfn.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qeuler {

/// The identities the library can check. Each tag string is part of the CLI
/// contract (`verify --suite <tag>`).
enum class IdentityId {
    frobenius_numbers,     ///< thm1: E~_{n,q} = H_n(-1/q)
    frobenius_polynomials, ///< thm2: E~_{n,q}(x) = H_n(-1/q, x)
    odd_shift_sum,         ///< cor3: q^n H_m(-1/q, n) + H_m(-1/q) = [2]_q sum (-1)^l l^m q^l, n odd
    unit_shift,            ///< thm4: q E~_{n,q}(1) + E~_{n,q} = [2]_q [n = 0]
    double_shift,          ///< thm5: q^2 E~_{n,q}(2) = q + q^2 + E~_{n,q}, n >= 1
    reflection,            ///< thm6: E~_{n,1/q}(1 - x) = (-1)^n E~_{n,q}(x)
    reflected_moment,      ///< thm7: int (1-x)^n = 1 + q + q^2 E~_{n,1/q}, n >= 1
    bernstein_moments,     ///< thm8: the two expansions of int B_{k,n}, 1 <= k < n
    bernstein_k0_remark,   ///< the k = 0 specialization as printed (known not to hold)
    classical_limit,       ///< E~_{n,q} at q = 1 equals the Euler number E_n
    weighted_closed_form,  ///< weighted closed form equals the weighted recurrence
};

inline constexpr std::array<std::pair<IdentityId, std::string_view>, 11> identity_tags{{
    {IdentityId::frobenius_numbers, "thm1"},
    {IdentityId::frobenius_polynomials, "thm2"},
    {IdentityId::odd_shift_sum, "cor3"},
    {IdentityId::unit_shift, "thm4"},
    {IdentityId::double_shift, "thm5"},
    {IdentityId::reflection, "thm6"},
    {IdentityId::reflected_moment, "thm7"},
    {IdentityId::bernstein_moments, "thm8"},
    {IdentityId::bernstein_k0_remark, "k0-remark"},
    {IdentityId::classical_limit, "classical"},
    {IdentityId::weighted_closed_form, "weighted"},
}};

inline std::string_view tag(IdentityId id) {
    for (const auto& [i, t] : identity_tags)
        if (i == id) return t;
    throw std::invalid_argument("unknown identity id");
}

inline std::optional<IdentityId> identity_from_tag(std::string_view t) {
    for (const auto& [i, s] : identity_tags)
        if (s == t) return i;
    return std::nullopt;
}

using Side = std::variant<QRatFn, XPoly>;

struct Witness {
    Side left;
    Side right;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdentityInstance {
    std::vector<std::pair<std::string, long>> params;
    bool holds = false;
    /// False for instances recorded to show that a hypothesis is needed.
    bool expected = true;
    std::optional<Witness> witness;
    std::string note;

    bool as_expected() const { return holds == expected; }
    friend bool operator==(const IdentityInstance&, const IdentityInstance&) = default;
};

struct IdentityReport {
    IdentityId id{};
    std::vector<IdentityInstance> instances;
    /// Free-form remarks such as excluded parameter ranges.
    std::vector<std::string> notes;

    bool all_as_expected() const {
        return std::all_of(instances.begin(), instances.end(),
                           [](const IdentityInstance& i) { return i.as_expected(); });
    }
    std::size_t passed() const {
        return static_cast<std::size_t>(
            std::count_if(instances.begin(), instances.end(), [](const auto& i) { return i.holds; }));
    }
    std::size_t failed() const { return instances.size() - passed(); }

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Compare two sides by canonical form; a witness is attached on failure.
template <class S>
IdentityInstance compare_sides(std::vector<std::pair<std::string, long>> params, const S& left,
                               const S& right, bool expected = true) {
    IdentityInstance inst;
    inst.params = std::move(params);
    inst.expected = expected;
    inst.holds = left == right;
    if (!inst.holds) inst.witness = Witness{Side(left), Side(right)};
    return inst;
}

} // namespace qeuler
