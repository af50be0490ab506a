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

#include "charp/cartier.hpp"

#include <algorithm>
#include <map>

namespace charp {

DifferentialForm MonomialTermDecomposition::reassemble() const {
    DifferentialForm out(cfg, degree);
    for (const auto& t : terms) {
        ExpVec exps(t.e.begin(), t.e.end());
        RationalFunction mono(Polynomial(cfg, exps, FqElem(1)));
        out.add_term(t.index, frobenius_scalar(t.c) * mono);
    }
    return out;
}

bool basis_term_closed(const MultiIndex& e, const IndexTuple& index) {
    std::size_t k = 0;
    for (std::uint32_t j = 0; j < e.size(); ++j) {
        bool in_index = false;
        while (k < index.size() && index[k] < j) ++k;
        if (k < index.size() && index[k] == j) in_index = true;
        if (!in_index && e[j] != 0) return false;
    }
    return true;
}

MonomialTermDecomposition monomial_decompose(const DifferentialForm& w) {
    MonomialTermDecomposition out;
    out.cfg = w.config();
    out.degree = w.degree();
    for (const auto& [index, coeff] : w.coefficients()) {
        KpCoordinates kc = kp_expand(coeff);
        for (const auto& [e, c] : kc.coords)
            out.terms.push_back(MonomialTerm{c, e, index});
    }
    return out;
}

namespace {

// Block signature sigma = e + 1_I; d acts within a fixed sigma, so the
// whole complex splits into these finite blocks.
std::vector<std::uint32_t> block_signature(const MonomialTerm& t) {
    std::vector<std::uint32_t> sigma(t.e.begin(), t.e.end());
    for (auto j : t.index) sigma[j] += 1;
    return sigma;
}

// Smallest j with 1 <= sigma_j <= p-1, or m when the block is Phi-type.
std::size_t min_free_slot(const std::vector<std::uint32_t>& sigma,
                          std::uint32_t p) {
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] >= 1 && sigma[j] <= p - 1) return j;
    return sigma.size();
}

// Contraction against slot j_star: for a term with j_star in I, the form
// (sign / sigma_{j_star}) * c^p * x^{e + d_{j_star}} dx_{I minus j_star}.
// Summed over a closed block its d recovers the block (Koszul homotopy).
void add_homotopy_term(DifferentialForm& xi, const ConfigPtr& cfg,
                       const MonomialTerm& t, std::size_t j_star,
                       std::uint32_t sigma_j) {
    auto pos = std::find(t.index.begin(), t.index.end(),
                         static_cast<std::uint32_t>(j_star));
    if (pos == t.index.end()) return;
    int sign = (pos - t.index.begin()) % 2 == 0 ? 1 : -1;
    IndexTuple rest;
    rest.reserve(t.index.size() - 1);
    for (auto j : t.index)
        if (j != j_star) rest.push_back(j);
    ExpVec exps(t.e.begin(), t.e.end());
    exps[j_star] += 1;
    FqElem inv_sigma = cfg->inv(cfg->from_code(sigma_j % cfg->p()));
    RationalFunction coeff =
        frobenius_scalar(t.c) *
        RationalFunction(Polynomial(cfg, exps, inv_sigma));
    xi.add_term(rest, sign == 1 ? coeff : -coeff);
}

}  // namespace

DifferentialForm project_nonclosed(const DifferentialForm& w) {
    MonomialTermDecomposition dec = monomial_decompose(w);
    MonomialTermDecomposition keep;
    keep.cfg = dec.cfg;
    keep.degree = dec.degree;
    for (const auto& t : dec.terms)
        if (!basis_term_closed(t.e, t.index)) keep.terms.push_back(t);
    return keep.reassemble();
}

DifferentialForm project_closed(const DifferentialForm& w) {
    MonomialTermDecomposition dec = monomial_decompose(w);
    MonomialTermDecomposition keep;
    keep.cfg = dec.cfg;
    keep.degree = dec.degree;
    for (const auto& t : dec.terms)
        if (basis_term_closed(t.e, t.index)) keep.terms.push_back(t);
    return keep.reassemble();
}

ExactnessResult is_exact(const DifferentialForm& w) {
    ExactnessResult res;
    if (!exterior_d(w).is_zero()) return res;  // closed stays false
    res.closed = true;

    ConfigPtr cfg = w.config();
    const std::uint32_t p = cfg->p();
    MonomialTermDecomposition dec = monomial_decompose(w);

    if (w.degree() == 0) {
        res.exact = w.is_zero();
        if (res.exact)
            res.witness = DifferentialForm(cfg, 0);
        else
            res.obstruction = dec.terms;
        return res;
    }

    DifferentialForm xi(cfg, w.degree() - 1);
    for (const auto& t : dec.terms) {
        auto sigma = block_signature(t);
        std::size_t j_star = min_free_slot(sigma, p);
        if (j_star == sigma.size()) {
            res.obstruction.push_back(t);
            continue;
        }
        add_homotopy_term(xi, cfg, t, j_star, sigma[j_star]);
    }
    if (!res.obstruction.empty()) return res;
    res.exact = true;
    res.witness = xi;
    return res;
}

CartierDecomposition cartier_decompose(const DifferentialForm& mu) {
    DifferentialForm dmu = exterior_d(mu);
    if (!dmu.is_zero())
        throw PreconditionError(
            "cartier_decompose requires a closed form; d(input) != 0");
    ConfigPtr cfg = mu.config();
    const std::uint32_t p = cfg->p();
    MonomialTermDecomposition dec = monomial_decompose(mu);

    CartierDecomposition out{
        LogTermSum(cfg, mu.degree()),
        DifferentialForm(cfg, mu.degree() == 0 ? 0 : mu.degree() - 1)};
    for (const auto& t : dec.terms) {
        auto sigma = block_signature(t);
        std::size_t j_star = min_free_slot(sigma, p);
        if (j_star < sigma.size()) {
            if (mu.degree() == 0)
                throw PreconditionError("closed 0-form with a free slot");
            add_homotopy_term(out.xi, cfg, t, j_star, sigma[j_star]);
            continue;
        }
        // Phi-type term c^p x^{(p-1) 1_I} dx_I = Phi(c x^{1_I} dlog x_I).
        ExpVec ones(cfg->var_count(), 0);
        for (auto j : t.index) ones[j] = 1;
        RationalFunction a =
            t.c * RationalFunction(Polynomial(cfg, ones, FqElem(1)));
        std::vector<RationalFunction> logs;
        logs.reserve(t.index.size());
        for (auto j : t.index)
            logs.push_back(RationalFunction::variable(cfg, cfg->var_name(j)));
        out.epsilon.add_term(a, std::move(logs));
    }
    return out;
}

}  // namespace charp
