#include "prozeta/rational_fn.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace prozeta {

using nlohmann::json;

RationalFnQT::RationalFnQT(LaurentPoly num, std::vector<DenFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& f : den_)
        if (f.a == 0 && f.b == 0)
            throw std::invalid_argument("denominator factor (1 - q^0 t^0) is zero");
    canonicalize();
}

void RationalFnQT::canonicalize() {
    std::sort(den_.begin(), den_.end());
    bool changed = true;
    while (changed && !num_.is_zero()) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = num_.divide_exact(it->a, it->b)) {
                num_ = std::move(*q);
                den_.erase(it);
                changed = true;
                break;
            }
        }
    }
}

RationalFnQT RationalFnQT::substitute_inverse() const {
    LaurentPoly num = num_.substitute_inverse();
    Int sign = (den_.size() % 2 == 0) ? 1 : -1;
    std::int64_t sq = 0, st = 0;
    for (const auto& f : den_) { sq += f.a; st += f.b; }
    return RationalFnQT(num.times_monomial(sq, st, sign), den_);
}

TruncatedSeries RationalFnQT::series_expand(int max_t_degree) const {
    if (max_t_degree < 0) throw std::invalid_argument("negative truncation degree");
    LaurentPoly num = num_;
    std::vector<DenFactor> expandable;
    for (const auto& f : den_) {
        if (f.b >= 1) {
            expandable.push_back(f);
        } else if (auto q = num.divide_exact(f.a, f.b)) {
            // constant-in-t (or t-inverse) factor removable by exact division
            num = std::move(*q);
        } else {
            throw std::domain_error("denominator factor with t exponent <= 0 is not removable");
        }
    }
    if (!num.is_zero() && num.min_t_exponent() < 0)
        throw std::domain_error("numerator has negative t exponents after clearing");

    TruncatedSeries s;
    s.max_t_degree = max_t_degree;
    s.coeffs.assign(static_cast<size_t>(max_t_degree) + 1, {});
    for (const auto& [e, c] : num.terms())
        if (e.t <= max_t_degree) s.coeffs[static_cast<size_t>(e.t)][e.q] += c;
    for (const auto& f : expandable) {
        // multiply by 1/(1 - q^a t^b) = sum_j q^{aj} t^{bj}
        std::vector<std::map<std::int64_t, Int>> out(static_cast<size_t>(max_t_degree) + 1);
        for (int k = 0; k <= max_t_degree; ++k) {
            auto& acc = out[static_cast<size_t>(k)];
            for (std::int64_t j = 0; k - j * f.b >= 0; ++j) {
                for (const auto& [qe, c] : s.coeffs[static_cast<size_t>(k - j * f.b)]) {
                    Int& slot = acc[qe + f.a * j];
                    slot += c;
                    if (slot == 0) acc.erase(qe + f.a * j);
                }
            }
        }
        s.coeffs = std::move(out);
    }
    return s;
}

std::string TruncatedSeries::coefficient_text(int k) const {
    const auto& m = coeffs.at(static_cast<size_t>(k));
    if (m.empty()) return "0";
    std::string s;
    bool leading = true;
    for (const auto& [qe, c] : m) {
        s += monomial_text(c, qe, 0, leading);
        leading = false;
    }
    return s;
}

std::string RationalFnQT::to_text() const {
    std::string s = "(" + num_.to_text() + ")";
    if (den_.empty()) return s;
    s += " / (";
    for (const auto& f : den_) {
        s += "(1";
        s += monomial_text(-1, f.a, f.b, false);
        s += ")";
    }
    s += ")";
    return s;
}

std::string RationalFnQT::to_latex() const {
    if (den_.empty()) return num_.to_latex();
    std::string den;
    for (const auto& f : den_) den += "(1-" + latex_power(f.a, f.b) + ")";
    return "\\frac{" + num_.to_latex() + "}{" + den + "}";
}

namespace {
json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return json(static_cast<std::int64_t>(c));
    return json(c.str());
}

Int coeff_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}
}  // namespace

std::string RationalFnQT::to_json() const {
    json num = json::array();
    for (const auto& [e, c] : num_.terms())
        num.push_back(json::array({e.q, e.t, coeff_to_json(c)}));
    json den = json::array();
    for (const auto& f : den_) den.push_back(json::array({f.a, f.b}));
    return json{{"num", num}, {"den", den}}.dump();
}

RationalFnQT RationalFnQT::from_json(const std::string& text) {
    json j = json::parse(text);
    LaurentPoly num;
    for (const auto& term : j.at("num"))
        num.add_term({term.at(0).get<std::int64_t>(), term.at(1).get<std::int64_t>()},
                     coeff_from_json(term.at(2)));
    std::vector<DenFactor> den;
    for (const auto& f : j.at("den"))
        den.push_back({f.at(0).get<std::int64_t>(), f.at(1).get<std::int64_t>()});
    return RationalFnQT(std::move(num), std::move(den));
}

bool rational_equal(const RationalFnQT& f, const RationalFnQT& g) {
    // cancel the shared denominator factors, then cross-multiply
    std::vector<DenFactor> fd = f.denominator_factors();
    std::vector<DenFactor> gd = g.denominator_factors();
    std::vector<DenFactor> f_only, g_only;
    auto fi = fd.begin();
    auto gi = gd.begin();
    while (fi != fd.end() && gi != gd.end()) {
        if (*fi == *gi) { ++fi; ++gi; }
        else if (*fi < *gi) f_only.push_back(*fi++);
        else g_only.push_back(*gi++);
    }
    f_only.insert(f_only.end(), fi, fd.end());
    g_only.insert(g_only.end(), gi, gd.end());

    LaurentPoly lhs = f.numerator();
    for (const auto& d : g_only)
        lhs = lhs * (LaurentPoly::one() - LaurentPoly::monomial(d.a, d.b));
    LaurentPoly rhs = g.numerator();
    for (const auto& d : f_only)
        rhs = rhs * (LaurentPoly::one() - LaurentPoly::monomial(d.a, d.b));
    return lhs == rhs;
}

PrimeSpecialized specialize_prime(const RationalFnQT& f, long p) {
    if (p < 2) throw std::invalid_argument("specialize_prime requires p >= 2");
    PrimeSpecialized out;
    for (const auto& [e, c] : f.numerator().terms()) {
        if (e.q < 0)
            throw std::domain_error("numerator has negative q exponents; cannot specialise integrally");
        out.num[e.t] += c * pow_int(p, static_cast<unsigned long>(e.q));
        if (out.num[e.t] == 0) out.num.erase(e.t);
    }
    for (const auto& d : f.denominator_factors()) {
        if (d.a < 0)
            throw std::domain_error("denominator factor has negative q exponent");
        out.den.emplace_back(pow_int(p, static_cast<unsigned long>(d.a)), d.b);
    }
    return out;
}

std::string PrimeSpecialized::to_text() const {
    std::string s = "(";
    if (num.empty()) {
        s += "0";
    } else {
        bool leading = true;
        for (const auto& [te, c] : num) {
            s += monomial_text(c, 0, te, leading);
            leading = false;
        }
    }
    s += ")";
    if (den.empty()) return s;
    s += " / (";
    for (const auto& [c, b] : den) {
        s += "(1";
        s += monomial_text(-c, 0, b, false);
        s += ")";
    }
    s += ")";
    return s;
}

}  // namespace prozeta
