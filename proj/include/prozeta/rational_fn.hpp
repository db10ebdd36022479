// Rational functions in (q, t) kept with factored denominators
// prod (1 - q^a t^b), plus truncated Dirichlet-series expansions.
#pragma once

#include "prozeta/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace prozeta {

struct DenFactor {
    std::int64_t a = 0;  // q exponent
    std::int64_t b = 0;  // t exponent
    auto operator<=>(const DenFactor&) const = default;
};

// coefficient of t^k is a polynomial in q (map q exponent -> coefficient)
struct TruncatedSeries {
    int max_t_degree = 0;
    std::vector<std::map<std::int64_t, Int>> coeffs;

    bool operator==(const TruncatedSeries&) const = default;
    std::string coefficient_text(int k) const;
};

class RationalFnQT {
  public:
    RationalFnQT() : num_(LaurentPoly::one()) {}
    RationalFnQT(LaurentPoly num, std::vector<DenFactor> den);

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<DenFactor>& denominator_factors() const { return den_; }

    bool operator==(const RationalFnQT&) const = default;  // canonical-form identity

    // q -> q^{-1}, t -> t^{-1}, applied factor-wise:
    // 1/(1 - q^{-a} t^{-b}) = -q^a t^b / (1 - q^a t^b)
    RationalFnQT substitute_inverse() const;

    TruncatedSeries series_expand(int max_t_degree) const;

    std::string to_text() const;
    std::string to_latex() const;
    std::string to_json() const;
    static RationalFnQT from_json(const std::string& text);

  private:
    void canonicalize();

    LaurentPoly num_;
    std::vector<DenFactor> den_;  // sorted multiset
};

// equality as rational functions, decided by cross-multiplication
bool rational_equal(const RationalFnQT& f, const RationalFnQT& g);

// q := p specialisation: numerator in t over the integers, denominator
// factors (1 - c t^b) with c = p^a
struct PrimeSpecialized {
    std::map<std::int64_t, Int> num;           // t exponent -> coefficient
    std::vector<std::pair<Int, std::int64_t>> den;  // (c, b) for (1 - c t^b)
    std::string to_text() const;
};
PrimeSpecialized specialize_prime(const RationalFnQT& f, long p);

}  // namespace prozeta
