/*
   Copyright 2026 The charp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARP_POLYNOMIAL_HPP
#define CHARP_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charp/field_config.hpp"

namespace charp {

/// Exponent vector of a monomial; length = number of configured variables.
using ExpVec = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Graded lexicographic order on exponent vectors: higher total degree
/// first, ties broken lexicographically on the declared variable order.
/// Used as std::map comparator so polynomials iterate leading term first.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over F_q in canonical form: no zero
/// coefficients, terms ordered graded-lex descending.
class Polynomial {
  public:
    using TermMap = std::map<ExpVec, FqElem, GradedLexGreater>;

    explicit Polynomial(ConfigPtr cfg);
    Polynomial(ConfigPtr cfg, FqElem constant);
    /// Single monomial c * x^exps.
    Polynomial(ConfigPtr cfg, const ExpVec& exps, FqElem c);

    static Polynomial variable(ConfigPtr cfg, const std::string& name);

    const ConfigPtr& config() const { return cfg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant term value (0 if absent).
    FqElem constant_value() const;

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::size_t var) const;
    bool uses_var(std::size_t var) const;

    const ExpVec& leading_exponents() const;
    FqElem leading_coeff() const;

    void add_term(const ExpVec& exps, FqElem c);
    FqElem coeff(const ExpVec& exps) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial scaled(FqElem c) const;
    Polynomial pow(std::int64_t n) const;
    /// Termwise Frobenius: every coefficient to the p-th power, every
    /// exponent multiplied by p. Equals (*this)^p by additivity.
    Polynomial frobenius() const;

    Polynomial derivative(std::size_t var) const;

    /// True iff every exponent is divisible by p (the exact criterion for
    /// membership in F_q[x]^p over a perfect coefficient field).
    bool is_pth_power() const;
    /// Unique g with g^p = *this; throws DomainError when no such g exists.
    Polynomial pth_root() const;

    /// Exact quotient; returns nullopt when rhs does not divide *this.
    std::optional<Polynomial> divided_by(const Polynomial& rhs) const;

    /// Leading coefficient made 1.
    Polynomial monic() const;

    /// Monic gcd; gcd(0, f) = monic f.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Rebuild over another config, mapping variables by name. Every used
    /// variable must exist in the target; field parameters must match.
    Polynomial embedded(ConfigPtr target) const;

  private:
    ConfigPtr cfg_;
    TermMap terms_;
};

// Univariate helpers (polynomials over a 1-variable config).

/// Dense coefficient list, index = degree. Empty for the zero polynomial.
std::vector<FqElem> to_dense_univariate(const Polynomial& f);
Polynomial from_dense_univariate(ConfigPtr cfg,
                                 const std::vector<FqElem>& coeffs);

/// Euclidean division f = q*g + r with deg r < deg g; g nonzero.
void divmod_univariate(const Polynomial& f, const Polynomial& g,
                       Polynomial& quot, Polynomial& rem);

/// Squarefree decomposition in characteristic p: returns the multiplicity ->
/// monic squarefree factor map with f = lc * prod s_i^i and the s_i pairwise
/// coprime.
std::map<std::int64_t, Polynomial> squarefree_decomposition(
    const Polynomial& f);

}  // namespace charp

#endif
