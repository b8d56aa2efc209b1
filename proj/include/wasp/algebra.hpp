#ifndef WASP_ALGEBRA_HPP
#define WASP_ALGEBRA_HPP

#include "wasp/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wasp {

// One free parameter theta_{s,t}: the share of total choice t's weight that
// goes to stable model s. Only materialized when t entails two or more
// models; a singleton share is the constant 1.
struct ThetaVar {
    std::uint32_t model = 0;  // model-id in the canonical stable-model order
    std::uint32_t choice = 0; // choice-id in the canonical total-choice order

    friend auto operator<=>(const ThetaVar&, const ThetaVar&) = default;
};

// "theta{m2|c0}"; the pipeline substitutes a namer with event labels.
using ThetaNamer = std::function<std::string(ThetaVar)>;
std::string default_theta_name(ThetaVar var);

// Sorted (variable, exponent>0) pairs. The empty monomial is the constant.
using Monomial = std::vector<std::pair<ThetaVar, std::uint32_t>>;

// Sparse multivariate polynomial with exact rational coefficients, kept
// canonical: no zero coefficients, terms ordered by monomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(long constant) : Poly(Rational(constant)) {}
    static Poly variable(ThetaVar var);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the value when every variable is 0; for constant
    // polynomials, the value).
    Rational constant_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::set<ThetaVar> variables() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& scalar);
    Poly pow(std::uint32_t exponent) const;

    // Exact value at a point. Throws SemanticError when a variable of the
    // polynomial has no assignment.
    Rational eval(const std::map<ThetaVar, Rational>& assignment,
                  const ThetaNamer& namer = default_theta_name) const;

    // Grammar: terms joined with +/-, coefficients as p/q, variables via the
    // namer, exponents with ^. Examples: "0", "7/10 + 3/10*theta{m1|c0}".
    std::string to_string(const ThetaNamer& namer = default_theta_name) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void add_term(const Monomial& monomial, const Rational& coefficient);

    std::map<Monomial, Rational> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(const Rational& scalar, Poly p);

// The simplex constraints: for every total choice entailing >= 2 models,
// the group of its theta variables sums to 1, each bounded to [0, 1].
// Groups never share variables.
struct ConstraintSet {
    std::vector<std::vector<ThetaVar>> groups; // each sorted; last = eliminated

    // Group sums must be exactly 1 and every group variable present and
    // inside [0, 1]; violations throw SemanticError (never renormalized).
    void validate(const std::map<ThetaVar, Rational>& assignment,
                  const ThetaNamer& namer = default_theta_name) const;

    // Fills in each group's missing last variable as 1 - sum(others); any
    // other variable missing is an error. Returns the completed assignment.
    std::map<ThetaVar, Rational> complete(
        std::map<ThetaVar, Rational> assignment,
        const ThetaNamer& namer = default_theta_name) const;
};

// Substitutes, in each group, the canonically-last variable by
// 1 - sum(other group variables). The result is the canonical reduced basis
// every reported polynomial uses (a two-model group keeps one variable
// theta, with the other share printed as 1 - theta).
Poly eliminate(const Poly& p, const ConstraintSet& constraints);

// num/Z pair canonicalized so structurally equal functions compare equal:
// zero numerator forces denominator 1, and the denominator is scaled to
// coprime integer coefficients with a positive leading one.
struct RationalFn {
    Poly num;
    Poly den = Poly(1);

    static RationalFn make(Poly num, Poly den);
    bool is_zero() const { return num.is_zero(); }

    Rational eval(const std::map<ThetaVar, Rational>& assignment,
                  const ThetaNamer& namer = default_theta_name) const;
    std::string to_string(const ThetaNamer& namer = default_theta_name) const;

    friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

} // namespace wasp

#endif
