#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace suspath {

/// Construction-side lower bound and counting upper bound for the maximum
/// triangle count among graphs avoiding the suspension of a k-vertex path:
///   lower = floor((k-2)/2) * n^2/8, meaningful when n is a multiple of
///           4*floor((k-2)/2);
///   upper = (k-2)/12 * n^2 + (k-2)^2/12 * n.
struct PropositionBounds {
    Rational lower;
    bool lower_applicable = false;
    Rational upper;
};

inline PropositionBounds proposition_bounds(int n, int k) {
    if (k < 4 || n < k) throw std::invalid_argument("requires n >= k >= 4");
    const std::int64_t q = (k - 2) / 2;
    PropositionBounds out;
    out.lower = Rational(q * n * n, 8);
    out.lower_applicable = n % (4 * q) == 0;
    out.upper = Rational(static_cast<std::int64_t>(k - 2) * n * n, 12) +
                Rational(static_cast<std::int64_t>(k - 2) * (k - 2) * n, 12);
    return out;
}

/// Classical path Turán bound in both of its printed forms,
/// n/(k-1)*C(k-1,2) and (k-2)n/2. They agree; both are reported.
struct PathEdgeBound {
    Rational tight;
    Rational loose;
};

inline PathEdgeBound erdos_gallai_bound(int n, int k) {
    if (k < 2) throw std::invalid_argument("requires k >= 2");
    if (n < 0) throw std::invalid_argument("requires n >= 0");
    PathEdgeBound out;
    out.tight = Rational(n, k - 1) * Rational(static_cast<std::int64_t>(k - 1) * (k - 2), 2);
    out.loose = Rational(static_cast<std::int64_t>(k - 2) * n, 2);
    return out;
}

/// max over n0 in [0, n] of n0*(n - n0) + floor((k-1)*n0/2), with ties broken
/// toward the smallest n0.
struct FValue {
    std::int64_t value = 0;
    int argmax_n0 = 0;
};

inline FValue f_function(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("requires n >= 0 and k >= 1");
    FValue out;
    out.value = -1;
    for (int n0 = 0; n0 <= n; ++n0) {
        const std::int64_t v = static_cast<std::int64_t>(n0) * (n - n0) +
                               static_cast<std::int64_t>(k - 1) * n0 / 2;
        if (v > out.value) {
            out.value = v;
            out.argmax_n0 = n0;
        }
    }
    return out;
}

/// floor(n^2/4) + floor((n+1)/4) in exact integer arithmetic. The expression
/// is evaluated unconditionally; its stated validity needs very large n.
inline std::int64_t p5hat_turan_upper(int n) {
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    return static_cast<std::int64_t>(n) * n / 4 + (n + 1) / 4;
}

struct BoundsReport {
    int n = 0, k = 0;
    Rational lower;
    bool lower_applicable = false;
    Rational upper;
    Rational eg_tight, eg_loose;
    std::int64_t f_value = 0;
    int f_argmax = 0;
    std::optional<std::int64_t> p5hat_upper;  // populated only for k == 5
    std::vector<std::string> caveats;
};

inline BoundsReport make_bounds_report(int n, int k) {
    BoundsReport r;
    r.n = n;
    r.k = k;
    const PropositionBounds pb = proposition_bounds(n, k);
    r.lower = pb.lower;
    r.lower_applicable = pb.lower_applicable;
    r.upper = pb.upper;
    if (!r.lower_applicable)
        r.caveats.push_back("lower bound construction needs n divisible by " +
                            std::to_string(4 * ((k - 2) / 2)));
    const PathEdgeBound eg = erdos_gallai_bound(n, k);
    r.eg_tight = eg.tight;
    r.eg_loose = eg.loose;
    const FValue f = f_function(n, k);
    r.f_value = f.value;
    r.f_argmax = f.argmax_n0;
    if (k == 5) {
        r.p5hat_upper = p5hat_turan_upper(n);
        r.caveats.push_back("p5hat_upper evaluated unconditionally; stated only for very large n");
    }
    return r;
}

inline nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["lower"] = r.lower.str();
    j["lower_applicable"] = r.lower_applicable;
    j["upper_num"] = r.upper.num();
    j["upper_den"] = r.upper.den();
    j["eg_tight"] = r.eg_tight.str();
    j["eg_loose"] = r.eg_loose.str();
    j["f_value"] = r.f_value;
    j["f_argmax"] = r.f_argmax;
    if (r.p5hat_upper)
        j["p5hat_upper"] = *r.p5hat_upper;
    else
        j["p5hat_upper"] = nullptr;
    j["caveats"] = r.caveats;
    return j;
}

}  // namespace suspath
