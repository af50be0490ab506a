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

#ifndef CHARP_DIFF_FORM_HPP
#define CHARP_DIFF_FORM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "charp/rational.hpp"

namespace charp {

/// Strictly increasing variable-index tuple addressing the wedge monomial
/// dx_{i_1} ^ ... ^ dx_{i_n}. Empty tuple = degree 0.
using IndexTuple = std::vector<std::uint32_t>;

/// Degree-n differential form over F_q(x_1,...,x_m) as coefficients on the
/// wedge-monomial basis dx_I. No stored zero coefficients; degree-0 forms
/// hold a single coefficient at the empty tuple.
class DifferentialForm {
  public:
    DifferentialForm(ConfigPtr cfg, std::uint32_t degree);
    /// Degree-0 form from a scalar.
    explicit DifferentialForm(const RationalFunction& scalar);

    static DifferentialForm d_variable(ConfigPtr cfg, const std::string& name);

    const ConfigPtr& config() const { return cfg_; }
    std::uint32_t degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexTuple, RationalFunction>& coefficients() const {
        return coeffs_;
    }

    void add_term(const IndexTuple& index, const RationalFunction& c);
    RationalFunction coeff(const IndexTuple& index) const;
    /// Scalar value of a degree-0 form.
    RationalFunction scalar_value() const;

    DifferentialForm operator-() const;
    DifferentialForm operator+(const DifferentialForm& rhs) const;
    DifferentialForm operator-(const DifferentialForm& rhs) const;
    bool operator==(const DifferentialForm& rhs) const;
    bool operator!=(const DifferentialForm& rhs) const {
        return !(*this == rhs);
    }

    DifferentialForm scaled(const RationalFunction& c) const;
    DifferentialForm embedded(ConfigPtr target) const;

  private:
    ConfigPtr cfg_;
    std::uint32_t degree_;
    std::map<IndexTuple, RationalFunction> coeffs_;
};

/// Exterior derivative; satisfies d(d(w)) = 0 and the Leibniz rule.
DifferentialForm exterior_d(const DifferentialForm& w);

/// Graded-anticommutative associative wedge product.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// dlog(f) = df/f for nonzero f; additive in products, kills p-th powers.
DifferentialForm dlog(const RationalFunction& f);

/// Sign of the permutation sorting (a, b) into a strictly increasing merge;
/// 0 when the tuples intersect. Used by wedge.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged);

}  // namespace charp

#endif
