#include "wasp/algebra.hpp"

#include "wasp/error.hpp"

#include <algorithm>
#include <sstream>

namespace wasp {

std::string default_theta_name(ThetaVar var) {
    return "theta{m" + std::to_string(var.model) + "|c" + std::to_string(var.choice) + "}";
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(ThetaVar var) {
    Poly p;
    p.terms_.emplace(Monomial{{var, 1}}, Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<ThetaVar> Poly::variables() const {
    std::set<ThetaVar> out;
    for (const auto& [monomial, coefficient] : terms_)
        for (const auto& [var, exp] : monomial) out.insert(var);
    return out;
}

void Poly::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [monomial, coefficient] : other.terms_) add_term(monomial, coefficient);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [monomial, coefficient] : other.terms_)
        add_term(monomial, Rational(-coefficient));
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    Poly result;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            // Merge the two sorted factor lists, adding exponents.
            Monomial merged;
            auto ia = ma.begin();
            auto ib = mb.begin();
            while (ia != ma.end() || ib != mb.end()) {
                if (ib == mb.end() || (ia != ma.end() && ia->first < ib->first))
                    merged.push_back(*ia++);
                else if (ia == ma.end() || ib->first < ia->first)
                    merged.push_back(*ib++);
                else {
                    merged.emplace_back(ia->first, ia->second + ib->second);
                    ++ia;
                    ++ib;
                }
            }
            result.add_term(merged, ca * cb);
        }
    }
    terms_ = std::move(result.terms_);
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [monomial, coefficient] : terms_) coefficient *= scalar;
    return *this;
}

Poly Poly::pow(std::uint32_t exponent) const {
    Poly result{Rational(1)};
    for (std::uint32_t i = 0; i < exponent; ++i) result *= *this;
    return result;
}

Rational Poly::eval(const std::map<ThetaVar, Rational>& assignment,
                    const ThetaNamer& namer) const {
    Rational total = 0;
    for (const auto& [monomial, coefficient] : terms_) {
        Rational term = coefficient;
        for (const auto& [var, exp] : monomial) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw SemanticError("no value assigned to " + namer(var));
            for (std::uint32_t i = 0; i < exp; ++i) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string Poly::to_string(const ThetaNamer& namer) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [monomial, coefficient] : terms_) {
        Rational magnitude = coefficient < 0 ? Rational(-coefficient) : coefficient;
        if (first) {
            if (coefficient < 0) out << "-";
            first = false;
        } else {
            out << (coefficient < 0 ? " - " : " + ");
        }
        bool need_coefficient = magnitude != 1 || monomial.empty();
        if (need_coefficient) out << to_fraction_string(magnitude);
        bool need_star = need_coefficient;
        for (const auto& [var, exp] : monomial) {
            if (need_star) out << "*";
            need_star = true;
            out << namer(var);
            if (exp > 1) out << "^" << exp;
        }
    }
    return out.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(const Rational& scalar, Poly p) { return p *= scalar; }

void ConstraintSet::validate(const std::map<ThetaVar, Rational>& assignment,
                             const ThetaNamer& namer) const {
    for (const auto& group : groups) {
        Rational sum = 0;
        for (ThetaVar var : group) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw SemanticError("no value assigned to " + namer(var));
            if (it->second < 0 || it->second > 1)
                throw SemanticError(namer(var) + " = " + to_fraction_string(it->second) +
                                    " outside [0, 1]");
            sum += it->second;
        }
        if (sum != 1)
            throw SemanticError("group of " + namer(group.front()) + " sums to " +
                                to_fraction_string(sum) + ", expected exactly 1");
    }
}

std::map<ThetaVar, Rational> ConstraintSet::complete(
    std::map<ThetaVar, Rational> assignment, const ThetaNamer& namer) const {
    for (const auto& group : groups) {
        if (assignment.count(group.back())) continue;
        Rational sum = 0;
        for (std::size_t i = 0; i + 1 < group.size(); ++i) {
            auto it = assignment.find(group[i]);
            if (it == assignment.end())
                throw SemanticError("no value assigned to " + namer(group[i]));
            sum += it->second;
        }
        assignment.emplace(group.back(), Rational(1) - sum);
    }
    return assignment;
}

Poly eliminate(const Poly& p, const ConstraintSet& constraints) {
    // Substitution for each group's last variable: 1 - sum(other vars).
    std::map<ThetaVar, Poly> substitutions;
    for (const auto& group : constraints.groups) {
        if (group.empty()) continue;
        Poly rest{Rational(1)};
        for (std::size_t i = 0; i + 1 < group.size(); ++i)
            rest -= Poly::variable(group[i]);
        substitutions.emplace(group.back(), std::move(rest));
    }

    Poly result;
    for (const auto& [monomial, coefficient] : p.terms()) {
        Poly term{coefficient};
        for (const auto& [var, exp] : monomial) {
            auto it = substitutions.find(var);
            if (it == substitutions.end())
                term *= Poly::variable(var).pow(exp);
            else
                term *= it->second.pow(exp);
        }
        result += term;
    }
    return result;
}

RationalFn RationalFn::make(Poly num, Poly den) {
    if (den.is_zero()) throw SemanticError("rational function with zero denominator");
    if (num.is_zero()) return {Poly(), Poly(1)};

    // Scale so the denominator has coprime integer coefficients and a
    // positive leading one; a constant denominator becomes exactly 1.
    Integer g = 0, l = 1;
    for (const auto& [monomial, coefficient] : den.terms()) {
        Integer n = numerator(coefficient);
        g = boost::multiprecision::gcd(g, n < 0 ? Integer(-n) : n);
        l = boost::multiprecision::lcm(l, denominator(coefficient));
    }
    Rational content(g, l);
    if (den.terms().begin()->second < 0) content = -content;
    Rational inverse = 1 / content;
    num *= inverse;
    den *= inverse;
    return {std::move(num), std::move(den)};
}

Rational RationalFn::eval(const std::map<ThetaVar, Rational>& assignment,
                          const ThetaNamer& namer) const {
    Rational d = den.eval(assignment, namer);
    if (d == 0) throw SemanticError("normalizer evaluates to zero at this assignment");
    return num.eval(assignment, namer) / d;
}

std::string RationalFn::to_string(const ThetaNamer& namer) const {
    if (den == Poly(1)) return num.to_string(namer);
    return "(" + num.to_string(namer) + ") / (" + den.to_string(namer) + ")";
}

} // namespace wasp
