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

#ifndef CHARP_AS_REDUCE_HPP
#define CHARP_AS_REDUCE_HPP

#include <string>
#include <vector>

#include "charp/rational.hpp"

namespace charp {

/// A pole location of the reduced representative. Finite places are grouped
/// by the squarefree denominator factor carrying them (every irreducible
/// divisor of `factor` is a place of the recorded order); the place at
/// infinity is flagged separately.
struct PoleDatum {
    bool at_infinity = false;
    Polynomial factor;  // monic squarefree; ignored when at_infinity
    std::int64_t order = 0;

    PoleDatum(bool inf, Polynomial f, std::int64_t ord)
        : at_infinity(inf), factor(std::move(f)), order(ord) {}
};

/// Decision data for a class in K/℘(K), K = F_q(t): a reduced
/// representative whose pole orders are all prime to p, a ℘-preimage
/// witness for the subtracted part, and the triviality verdict.
struct ASReducedClass {
    RationalFunction representative;
    bool trivial = false;
    std::vector<PoleDatum> pole_data;
    /// g with input = representative + g^p - g.
    RationalFunction witness;
};

/// Reduces f modulo ℘(K) = {g^p - g}: at every pole (finite or infinite)
/// with order divisible by p, subtracts an explicit ℘-image lowering the
/// order, and reduces the constant term to a fixed coset representative of
/// ℘(F_q). Terminates because each step strictly lowers a pole order.
/// The result is trivial iff the representative is zero.
ASReducedClass as_reduce(const RationalFunction& f);

}  // namespace charp

#endif
