#pragma once

// Text, LaTeX and JSON forms of rational functions, polynomials, identity
// reports and convergence runs, plus an optional on-disk sequence cache.

#include "qeuler/bigrat.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qratfn.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qeuler {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Plain text

/// Ascending-power sum, e.g. "-q + q^2" or "1/2 - 3*q".
inline std::string to_string(const QPoly& p, char var = 'q') {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const BigRat& c = p.coeffs()[k];
        if (sgn(c) == 0) continue;
        BigRat mag = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// The fixed debug form "(<num>)/(<den>)".
inline std::string to_string(const QRatFn& f) { return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")"; }

/// "[c0] + [c1]*x + ..." with each coefficient in debug form.
inline std::string to_string(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + to_string(p.coeffs()[k]) + "]";
        if (k >= 1) out += "*x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// Human-readable form: "-q/(1 + q)", "1", "q^2 - q".
inline std::string pretty(const QRatFn& f) {
    const bool den_one = f.den().degree() == 0;
    const bool num_compound = f.num().coeffs().size() > 1 &&
                              std::count_if(f.num().coeffs().begin(), f.num().coeffs().end(),
                                            [](const BigRat& c) { return sgn(c) != 0; }) > 1;
    const std::string num = to_string(f.num());
    if (den_one) return num;
    return (num_compound ? "(" + num + ")" : num) + "/(" + to_string(f.den()) + ")";
}

// ---------------------------------------------------------------------------
// LaTeX

inline std::string latex_rat(const BigRat& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

inline std::string latex(const QPoly& p, char var = 'q') {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const BigRat& c = p.coeffs()[k];
        if (sgn(c) == 0) continue;
        BigRat mag = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (k == 0 || mag != 1) out += latex_rat(mag);
        if (k >= 1) out += var;
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

inline std::string latex(const QRatFn& f) {
    if (f.den().degree() == 0) return latex(f.num());
    return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

inline std::string latex(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "\\left(" + latex(p.coeffs()[k]) + "\\right)";
        if (k >= 1) out += " x";
        if (k > 1) out += "^{" + std::to_string(k) + "}";
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const QPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline QPoly qpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
    std::vector<BigRat> c;
    for (const auto& v : j) {
        if (!v.is_string()) throw std::invalid_argument("coefficients must be rational strings");
        c.push_back(parse_rat(v.get<std::string>()));
    }
    return QPoly(std::move(c));
}

inline json to_json(const QRatFn& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline QRatFn qratfn_from_json(const json& j) {
    return QRatFn(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

inline json to_json(const XPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

inline XPoly xpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<QRatFn> c;
    for (const auto& v : j) c.push_back(qratfn_from_json(v));
    return XPoly(std::move(c));
}

inline json to_json(const Side& s) {
    if (const auto* f = std::get_if<QRatFn>(&s)) return json{{"type", "ratfn"}, {"value", to_json(*f)}};
    return json{{"type", "xpoly"}, {"value", to_json(std::get<XPoly>(s))}};
}

inline Side side_from_json(const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "ratfn") return qratfn_from_json(j.at("value"));
    if (type == "xpoly") return xpoly_from_json(j.at("value"));
    throw std::invalid_argument("unknown witness type '" + type + "'");
}

inline json to_json(const IdentityInstance& inst) {
    json params = json::object();
    for (const auto& [k, v] : inst.params) params[k] = v;
    json j{{"params", params}, {"holds", inst.holds}, {"expected", inst.expected}};
    if (inst.witness) j["witness"] = json{{"left", to_json(inst.witness->left)}, {"right", to_json(inst.witness->right)}};
    if (!inst.note.empty()) j["note"] = inst.note;
    return j;
}

inline IdentityInstance instance_from_json(const json& j) {
    IdentityInstance inst;
    for (const auto& [k, v] : j.at("params").items()) inst.params.emplace_back(k, v.get<long>());
    inst.holds = j.at("holds").get<bool>();
    inst.expected = j.at("expected").get<bool>();
    if (j.contains("witness"))
        inst.witness = Witness{side_from_json(j.at("witness").at("left")), side_from_json(j.at("witness").at("right"))};
    if (j.contains("note")) inst.note = j.at("note").get<std::string>();
    return inst;
}

enum class RecordKind { number, polynomial, report, convergence };

struct NumberPayload {
    long n;
    QRatFn value;
    friend bool operator==(const NumberPayload&, const NumberPayload&) = default;
};

struct PolynomialPayload {
    long n;
    XPoly value;
    friend bool operator==(const PolynomialPayload&, const PolynomialPayload&) = default;
};

struct ConvergencePayload {
    std::vector<ConvergencePoint> points;
    bool converged;
    friend bool operator==(const ConvergencePayload&, const ConvergencePayload&) = default;
};

/// One unit of machine-readable CLI output.
struct OutputRecord {
    std::variant<NumberPayload, PolynomialPayload, IdentityReport, ConvergencePayload> payload;
    /// Parameters used to produce the record.
    json metadata = json::object();

    RecordKind kind() const { return static_cast<RecordKind>(payload.index()); }
    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline std::string_view kind_name(RecordKind k) {
    switch (k) {
    case RecordKind::number: return "number";
    case RecordKind::polynomial: return "polynomial";
    case RecordKind::report: return "report";
    case RecordKind::convergence: return "convergence";
    }
    return "?";
}

inline json to_json(const OutputRecord& r) {
    json j{{"kind", kind_name(r.kind())}};
    std::visit(
        [&j](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, NumberPayload>) {
                j["n"] = p.n;
                j["num"] = to_json(p.value.num());
                j["den"] = to_json(p.value.den());
            } else if constexpr (std::is_same_v<P, PolynomialPayload>) {
                j["n"] = p.n;
                j["coeffs"] = to_json(p.value);
            } else if constexpr (std::is_same_v<P, IdentityReport>) {
                j["identity"] = tag(p.id);
                j["as_expected"] = p.all_as_expected();
                j["notes"] = p.notes;
                json inst = json::array();
                for (const auto& i : p.instances) inst.push_back(to_json(i));
                j["instances"] = std::move(inst);
            } else {
                json pts = json::array();
                for (const auto& c : p.points)
                    pts.push_back(json{{"N", c.level}, {"valuation", c.valuation}, {"exact", c.exact}});
                j["points"] = std::move(pts);
                j["converged"] = p.converged;
            }
        },
        r.payload);
    j["metadata"] = r.metadata;
    return j;
}

inline OutputRecord record_from_json(const json& j) {
    OutputRecord r;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "number") {
        r.payload = NumberPayload{j.at("n").get<long>(), QRatFn(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")))};
    } else if (kind == "polynomial") {
        r.payload = PolynomialPayload{j.at("n").get<long>(), xpoly_from_json(j.at("coeffs"))};
    } else if (kind == "report") {
        const auto id = identity_from_tag(j.at("identity").get<std::string>());
        if (!id) throw std::invalid_argument("unknown identity tag");
        IdentityReport rep{*id, {}, j.at("notes").get<std::vector<std::string>>()};
        for (const auto& i : j.at("instances")) rep.instances.push_back(instance_from_json(i));
        r.payload = std::move(rep);
    } else if (kind == "convergence") {
        ConvergencePayload c{{}, j.at("converged").get<bool>()};
        for (const auto& pt : j.at("points"))
            c.points.push_back({pt.at("N").get<long>(), pt.at("valuation").get<long>(), pt.at("exact").get<bool>()});
        r.payload = std::move(c);
    } else {
        throw std::invalid_argument("unknown record kind '" + kind + "'");
    }
    if (j.contains("metadata")) r.metadata = j.at("metadata");
    return r;
}

inline std::string serialize(const OutputRecord& r) { return to_json(r).dump(); }
inline OutputRecord parse_record(const std::string& text) { return record_from_json(json::parse(text)); }

// ---------------------------------------------------------------------------
// On-disk sequence cache (QEULER_CACHE_DIR)

inline std::optional<std::filesystem::path> cache_dir_from_env() {
    const char* dir = std::getenv("QEULER_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key) {
    std::string name;
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return dir / (name + ".json");
}

inline std::optional<std::vector<QRatFn>> load_cached_sequence(const std::filesystem::path& dir,
                                                               const std::string& key) {
    std::ifstream in(cache_file(dir, key));
    if (!in) return std::nullopt;
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("key", "") != key || !j.contains("entries"))
        return std::nullopt;
    try {
        std::vector<QRatFn> out;
        for (const auto& e : j.at("entries")) out.push_back(qratfn_from_json(e));
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline void save_cached_sequence(const std::filesystem::path& dir, const std::string& key,
                                 const std::vector<QRatFn>& entries) {
    std::filesystem::create_directories(dir);
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    const auto path = cache_file(dir, key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << json{{"key", key}, {"entries", std::move(arr)}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace qeuler
