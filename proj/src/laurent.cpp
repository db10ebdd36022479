#include "prozeta/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace prozeta {

LaurentPoly LaurentPoly::monomial(std::int64_t q, std::int64_t t, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[{q, t}] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(std::int64_t q, std::int64_t t) const {
    auto it = terms_.find({q, t});
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::coefficient_sum() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(QTExp e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.q, -e.t}] = c;
    return r;
}

LaurentPoly LaurentPoly::times_monomial(std::int64_t q, std::int64_t t, const Int& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[{e.q + q, e.t + t}] = coef * c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned exp) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (exp) {
        if (exp & 1) r = r * base;
        base = base * base;
        exp >>= 1;
    }
    return r;
}

std::int64_t LaurentPoly::min_q_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial");
    std::int64_t m = terms_.begin()->first.q;
    for (const auto& [e, c] : terms_) m = std::min(m, e.q);
    return m;
}

std::int64_t LaurentPoly::min_t_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial");
    std::int64_t m = terms_.begin()->first.t;
    for (const auto& [e, c] : terms_) m = std::min(m, e.t);
    return m;
}

std::int64_t LaurentPoly::max_t_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial");
    std::int64_t m = terms_.begin()->first.t;
    for (const auto& [e, c] : terms_) m = std::max(m, e.t);
    return m;
}

namespace {
// floored division/modulo for class keys
std::int64_t fdiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_exact(std::int64_t a, std::int64_t b) const {
    if (a == 0 && b == 0) throw std::invalid_argument("(1 - q^0 t^0) is zero");
    if (terms_.empty()) return zero();
    // Write f = sum over residue classes of (monomial_r * sum_k c_k X^k)
    // with X = q^a t^b; f is divisible by (1 - X) exactly when every class
    // has vanishing coefficient sum, and the quotient coefficients are the
    // partial sums.
    std::map<QTExp, std::map<std::int64_t, Int>> classes;
    for (const auto& [e, c] : terms_) {
        std::int64_t k = (b != 0) ? fdiv(e.t, b) : fdiv(e.q, a);
        QTExp key{e.q - k * a, e.t - k * b};
        classes[key][k] = c;
    }
    LaurentPoly quotient;
    for (const auto& [key, positions] : classes) {
        Int run = 0;
        auto it = positions.begin();
        std::int64_t k = it->first;
        const std::int64_t k_last = positions.rbegin()->first;
        while (k <= k_last) {
            if (it != positions.end() && it->first == k) {
                run += it->second;
                ++it;
            }
            if (k == k_last) {
                if (run != 0) return std::nullopt;  // non-terminating quotient
            } else if (run != 0) {
                quotient.terms_[{key.q + k * a, key.t + k * b}] = run;
            }
            ++k;
        }
    }
    return quotient;
}

std::string monomial_text(const Int& coeff, std::int64_t q, std::int64_t t, bool leading) {
    std::string s;
    Int c = coeff;
    if (leading) {
        if (c < 0) { s += "-"; c = -c; }
    } else {
        s += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
    }
    const bool bare = (q == 0 && t == 0);
    if (c != 1 || bare) s += c.str();
    if (q != 0) {
        if (c != 1) s += " ";
        s += (q == 1) ? "q" : "q^" + std::to_string(q);
    }
    if (t != 0) {
        if (q != 0 || c != 1) s += " ";
        s += (t == 1) ? "t" : "t^" + std::to_string(t);
    }
    return s;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        s += monomial_text(c, e.q, e.t, leading);
        leading = false;
    }
    return s;
}

std::string latex_power(std::int64_t q, std::int64_t t) {
    if (q == 0 && t == 0) return "1";
    // the monomial q^a t^b denotes p^{a - b s}
    std::string expo;
    if (q != 0) expo += std::to_string(q);
    if (t != 0) {
        if (t > 0) expo += "-";
        else if (!expo.empty()) expo += "+";
        std::int64_t at = t < 0 ? -t : t;
        if (at != 1) expo += std::to_string(at);
        expo += "s";
    }
    return "p^{" + expo + "}";
}

std::string LaurentPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        Int ac = c;
        if (leading) {
            if (ac < 0) { s += "-"; ac = -ac; }
        } else {
            s += (ac < 0) ? "-" : "+";
            if (ac < 0) ac = -ac;
        }
        const std::string power = latex_power(e.q, e.t);
        if (ac != 1) {
            s += ac.str();
            if (power != "1") s += power;
        } else {
            s += power;
        }
        leading = false;
    }
    return s;
}

}  // namespace prozeta
