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

#ifndef CHARP_GEN_RANDOM_HPP
#define CHARP_GEN_RANDOM_HPP

#include "charp/log_terms.hpp"
#include "charp/rng.hpp"

namespace charp {

/// Random polynomial with per-variable degree <= deg and at most max_terms
/// monomials (possibly zero).
Polynomial random_polynomial(Rng& rng, const ConfigPtr& cfg, std::int64_t deg,
                             std::size_t max_terms);

/// Nonzero variant.
Polynomial random_nonzero_polynomial(Rng& rng, const ConfigPtr& cfg,
                                     std::int64_t deg, std::size_t max_terms);

/// Random rational function with numerator/denominator degree <= deg.
RationalFunction random_rational(Rng& rng, const ConfigPtr& cfg,
                                 std::int64_t deg, std::size_t max_terms);

RationalFunction random_nonzero_rational(Rng& rng, const ConfigPtr& cfg,
                                         std::int64_t deg,
                                         std::size_t max_terms);

/// Random degree-n form with a few nonzero wedge coefficients.
DifferentialForm random_form(Rng& rng, const ConfigPtr& cfg,
                             std::uint32_t degree, std::int64_t deg,
                             std::size_t max_terms);

/// Random presentation sum of a * dlog(b_1) ^ ... ^ dlog(b_n).
LogTermSum random_log_terms(Rng& rng, const ConfigPtr& cfg,
                            std::uint32_t degree, std::size_t n_terms,
                            std::int64_t deg);

}  // namespace charp

#endif
