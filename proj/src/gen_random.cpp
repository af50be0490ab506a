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

#include "charp/gen_random.hpp"

namespace charp {

Polynomial random_polynomial(Rng& rng, const ConfigPtr& cfg, std::int64_t deg,
                             std::size_t max_terms) {
    Polynomial out(cfg);
    std::size_t n_terms = rng.below(max_terms + 1);
    for (std::size_t t = 0; t < n_terms; ++t) {
        ExpVec e(cfg->var_count());
        for (auto& x : e) x = rng.range(0, deg);
        FqElem c = cfg->from_code(static_cast<std::int64_t>(
            1 + rng.below(cfg->q() - 1)));
        out.add_term(e, c);
    }
    return out;
}

Polynomial random_nonzero_polynomial(Rng& rng, const ConfigPtr& cfg,
                                     std::int64_t deg,
                                     std::size_t max_terms) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial f = random_polynomial(rng, cfg, deg, max_terms);
        if (!f.is_zero()) return f;
    }
    return Polynomial(cfg, FqElem(1));
}

RationalFunction random_rational(Rng& rng, const ConfigPtr& cfg,
                                 std::int64_t deg, std::size_t max_terms) {
    Polynomial num = random_polynomial(rng, cfg, deg, max_terms);
    Polynomial den = random_nonzero_polynomial(rng, cfg, deg, max_terms);
    return RationalFunction(num, den);
}

RationalFunction random_nonzero_rational(Rng& rng, const ConfigPtr& cfg,
                                         std::int64_t deg,
                                         std::size_t max_terms) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        RationalFunction f = random_rational(rng, cfg, deg, max_terms);
        if (!f.is_zero()) return f;
    }
    return RationalFunction(cfg, FqElem(1));
}

DifferentialForm random_form(Rng& rng, const ConfigPtr& cfg,
                             std::uint32_t degree, std::int64_t deg,
                             std::size_t max_terms) {
    DifferentialForm out(cfg, degree);
    if (degree > cfg->var_count()) return out;
    std::size_t n_coeffs = 1 + rng.below(2);
    for (std::size_t t = 0; t < n_coeffs; ++t) {
        // Random strictly increasing index tuple.
        IndexTuple idx;
        std::size_t remaining = degree;
        for (std::uint32_t v = 0;
             v < cfg->var_count() && remaining > 0; ++v) {
            std::size_t left = cfg->var_count() - v;
            if (left == remaining || rng.below(2) == 0) {
                idx.push_back(v);
                --remaining;
            }
        }
        out.add_term(idx, random_rational(rng, cfg, deg, max_terms));
    }
    return out;
}

LogTermSum random_log_terms(Rng& rng, const ConfigPtr& cfg,
                            std::uint32_t degree, std::size_t n_terms,
                            std::int64_t deg) {
    LogTermSum out(cfg, degree);
    for (std::size_t t = 0; t < n_terms; ++t) {
        std::vector<RationalFunction> logs;
        logs.reserve(degree);
        for (std::uint32_t i = 0; i < degree; ++i)
            logs.push_back(random_nonzero_rational(rng, cfg, deg, 2));
        out.add_term(random_rational(rng, cfg, deg, 2), std::move(logs));
    }
    return out;
}

}  // namespace charp
