#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace ptri {

using Exps = std::vector<int>;

// Graded lexicographic order: total degree first, then the first differing exponent.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const;
};

// Laurent polynomial with integer coefficients in a fixed number of variables.
// Terms are kept in graded-lex order with no zero coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exps, mpz_class, GradedLex>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpz_class& c);
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly monomial(const Exps& e, const mpz_class& c = 1);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;
    bool positive() const;
    std::size_t size() const { return terms_.size(); }

    const Exps& leading() const { return terms_.rbegin()->first; }
    const Exps& trailing() const { return terms_.begin()->first; }

    void add_term(const Exps& e, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly operator-() const;
    LaurentPoly pow(unsigned k) const;
    friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

    // max(0, -min exponent) per variable
    std::vector<int> denominator_vector() const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    // Canonical text: terms in decreasing graded-lex order, e.g. "x^2*y^-1 - 3*z + 1".
    std::string to_string(const std::vector<std::string>& names) const;
    // Numerator over a monomial denominator, e.g. "(x + y)/z".
    std::string to_fraction(const std::vector<std::string>& names) const;
    // Parses sums, products, integer powers, parentheses and exact division.
    static LaurentPoly parse(const std::string& text, const std::vector<std::string>& names);

private:
    int nvars_ = 0;
    Terms terms_;
    void check_dim(const LaurentPoly& g) const;
};

// q with q * g == f, by leading-term elimination. Throws NotDivisible otherwise.
LaurentPoly div_exact(const LaurentPoly& f, const LaurentPoly& g);

std::vector<std::string> default_names(int nvars);

} // namespace ptri
