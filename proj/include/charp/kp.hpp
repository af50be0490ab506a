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

#ifndef CHARP_KP_HPP
#define CHARP_KP_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "charp/rational.hpp"

namespace charp {

/// Multi-index e in {0,...,p-1}^s addressing the K^p-basis monomial
/// a_1^{e_1} ... a_s^{e_s} of K^p(a_1,...,a_s).
using MultiIndex = std::vector<std::uint32_t>;

/// Result of a K^p-coordinate expansion f = sum_e f_e^p a^e: the nonzero
/// coordinates f_e together with the ordered monomial p-basis subset used.
struct KpCoordinates {
    std::vector<Polynomial> basis;  // a_1, ..., a_s (monomials)
    std::map<MultiIndex, RationalFunction> coords;

    /// Exact reassembly sum_e f_e^p a^e.
    RationalFunction reassemble() const;
};

/// True iff the exponent vectors of the candidate monomials are linearly
/// independent mod p; the exact p-independence criterion for monomials in a
/// rational function field.
bool monomials_p_independent(const std::vector<Polynomial>& monomials);

/// The standard p-basis x_1, ..., x_m of F_q(x_1,...,x_m).
std::vector<Polynomial> standard_p_basis(const ConfigPtr& cfg);

/// Unique coordinates f_e with f = sum_e f_e^p a^e over the given monomial
/// p-basis subset. Throws PreconditionError on a p-dependent basis and
/// MembershipError (naming an irreducible exponent residue class) when f
/// lies outside K^p(a_1,...,a_s).
KpCoordinates kp_expand(const RationalFunction& f,
                        const std::vector<Polynomial>& basis);

/// kp_expand over the standard basis.
KpCoordinates kp_expand(const RationalFunction& f);

}  // namespace charp

#endif
