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

#ifndef CHARP_CARTIER_HPP
#define CHARP_CARTIER_HPP

#include <optional>

#include "charp/kp.hpp"
#include "charp/log_terms.hpp"

namespace charp {

/// One term c^p * x^e * dx_I of a monomial decomposition: the coefficient
/// root c, the reduced exponent multi-index e in {0,...,p-1}^m over ALL
/// variables, and the wedge index tuple I.
struct MonomialTerm {
    RationalFunction c;
    MultiIndex e;
    IndexTuple index;
};

/// Expansion of a form over the K^p-basis {x^e dx_I} of Omega^n. The basis
/// is d-stable with F_p matrix entries, which makes closedness, exactness
/// and the Cartier decomposition diagonal per block.
struct MonomialTermDecomposition {
    ConfigPtr cfg;
    std::uint32_t degree = 0;
    std::vector<MonomialTerm> terms;

    DifferentialForm reassemble() const;
};

/// True iff the basis term x^e dx_I is closed, i.e. e_j = 0 for every
/// j outside I.
bool basis_term_closed(const MultiIndex& e, const IndexTuple& index);

/// Expands every coefficient of w by kp_expand on the standard basis.
MonomialTermDecomposition monomial_decompose(const DifferentialForm& w);

/// Canonical quotient representative mod closed forms: the non-closed
/// monomial terms of w, reassembled. (The I'_n-coordinate projection.)
DifferentialForm project_nonclosed(const DifferentialForm& w);

/// Complement of project_nonclosed: the closed monomial part.
DifferentialForm project_closed(const DifferentialForm& w);

struct ExactnessResult {
    bool exact = false;
    /// Antiderivative with d(witness) = w, present when exact.
    std::optional<DifferentialForm> witness;
    /// The obstructing Phi-type monomial terms (e = (p-1) on I, 0 off I)
    /// when not exact and w is closed.
    std::vector<MonomialTerm> obstruction;
    /// False iff d(w) != 0, in which case nothing else is filled in.
    bool closed = false;
};

/// Exactness decision with witness. A closed form is exact iff its monomial
/// decomposition has no Phi-type terms; the witness integrates each
/// remaining block against the smallest eligible wedge slot.
ExactnessResult is_exact(const DifferentialForm& w);

/// Closed-form splitting mu = Phi(epsilon) + d(xi).
struct CartierDecomposition {
    LogTermSum epsilon;
    DifferentialForm xi;
};

/// Throws PreconditionError (carrying d(mu) in text form) unless d(mu) = 0.
CartierDecomposition cartier_decompose(const DifferentialForm& mu);

}  // namespace charp

#endif
