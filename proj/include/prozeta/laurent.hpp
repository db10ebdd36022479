// Sparse Laurent polynomials in the two formal variables q and t with
// big-integer coefficients. A monomial p^{alpha - beta s} of a local zeta
// function is stored as q^alpha t^beta; exponents may be negative anywhere.
#pragma once

#include "prozeta/numbers.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace prozeta {

struct QTExp {
    std::int64_t q = 0;
    std::int64_t t = 0;
    auto operator<=>(const QTExp&) const = default;
    QTExp operator+(const QTExp& o) const { return {q + o.q, t + o.t}; }
    QTExp operator-(const QTExp& o) const { return {q - o.q, t - o.t}; }
};

class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 0, 1); }
    static LaurentPoly monomial(std::int64_t q, std::int64_t t, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<QTExp, Int>& terms() const { return terms_; }
    Int coeff(std::int64_t q, std::int64_t t) const;
    Int coefficient_sum() const;  // evaluation at q = t = 1

    void add_term(QTExp e, const Int& c);  // canonical: zero sums are erased

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    // q -> q^{-1}, t -> t^{-1}; an involution
    LaurentPoly substitute_inverse() const;

    LaurentPoly times_monomial(std::int64_t q, std::int64_t t, const Int& c = 1) const;
    LaurentPoly pow(unsigned exp) const;

    std::int64_t min_q_exponent() const;  // throws on zero polynomial
    std::int64_t min_t_exponent() const;
    std::int64_t max_t_exponent() const;

    // exact division by (1 - q^a t^b); nullopt when not divisible
    std::optional<LaurentPoly> divide_exact(std::int64_t a, std::int64_t b) const;

    // plain text, e.g. "1 + q^4 t^2"
    std::string to_text() const;
    // LaTeX in p^{alpha - beta s} notation, e.g. "1+p^{4-2s}"
    std::string to_latex() const;

  private:
    std::map<QTExp, Int> terms_;
};

// "q^4 t^2"-style rendering of one monomial with coefficient
std::string monomial_text(const Int& coeff, std::int64_t q, std::int64_t t, bool leading);
// "p^{4-2s}"-style power for LaTeX output
std::string latex_power(std::int64_t q, std::int64_t t);

}  // namespace prozeta
