#pragma once

#include <json.hpp>

#include <numeric>
#include <string>
#include <utility>

#include "schurq/rational_fn.hpp"

namespace schurq {

using json = nlohmann::json;

inline json laurent_to_json(const LaurentPoly& p) {
    json obj = json::object();
    for (long e = p.lo(); e <= p.hi(); ++e) {
        const Rational c = p.coeff(e);
        if (!c.is_zero()) obj[std::to_string(e)] = c.str();
    }
    return obj;
}

inline LaurentPoly laurent_from_json(const json& obj) {
    LaurentPoly p;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        p += LaurentPoly::monomial(Rational::from_string(it.value().get<std::string>()),
                                   std::stol(it.key()));
    return p;
}

/// Wire format: {"num": {s-exponent: coefficient}, "den": {...}, "root_order": r}.
inline json rationalfn_to_json(const RationalFn& f, int root_order) {
    return json{{"num", laurent_to_json(f.num())},
                {"den", laurent_to_json(f.den())},
                {"root_order", root_order}};
}

inline std::pair<RationalFn, int> rationalfn_from_json(const json& obj) {
    return {RationalFn(laurent_from_json(obj.at("num")), laurent_from_json(obj.at("den"))),
            obj.at("root_order").get<int>()};
}

/// Renders a power of q from an s-exponent: q^(e/r) in lowest terms.
inline std::string q_power_str(long s_exp, int root_order) {
    const long g = std::gcd(s_exp < 0 ? -s_exp : s_exp, static_cast<long>(root_order));
    const long num = s_exp / g, den = root_order / g;
    if (den == 1) {
        if (num == 1) return "q";
        return "q^" + std::to_string(num);
    }
    return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

/// Ascending powers of q with explicit separators: "2 + 2*q - q^2".
inline std::string q_format(const LaurentPoly& p, int root_order) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long e = p.lo(); e <= p.hi(); ++e) {
        const Rational c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty())
            out += c.sign() > 0 ? " + " : " - ";
        else if (c.sign() < 0)
            out += "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (e == 0) {
            out += a.str();
        } else if (a.is_one()) {
            out += q_power_str(e, root_order);
        } else {
            out += a.str() + "*" + q_power_str(e, root_order);
        }
    }
    return out;
}

inline std::string q_format(const RationalFn& f, int root_order) {
    if (f.is_polynomial()) return q_format(f.num(), root_order);
    return "(" + q_format(f.num(), root_order) + ") / (" + q_format(f.den(), root_order) + ")";
}

}  // namespace schurq
