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

#include "charp/as_reduce.hpp"

#include <algorithm>

#include "charp/modp_linalg.hpp"

namespace charp {

namespace {

// Extended Euclid in F_q[t]: w^{-1} mod s for coprime w, s.
Polynomial invert_mod(const Polynomial& w, const Polynomial& s) {
    ConfigPtr cfg = w.config();
    Polynomial r0 = s.monic(), r1 = w;
    Polynomial t0(cfg), t1(cfg, FqElem(1));
    Polynomial q(cfg), r(cfg);
    while (!r1.is_zero()) {
        divmod_univariate(r0, r1, q, r);
        Polynomial t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r0.total_degree() != 0)
        throw PreconditionError("invert_mod: arguments are not coprime");
    Polynomial inv = t0.scaled(cfg->inv(r0.leading_coeff()));
    divmod_univariate(inv, s, q, r);
    return r;
}

// F_p-coordinates of an element of F_q[t]/(s): base-p digits of each
// coefficient, degree-major.
std::vector<std::uint32_t> residue_coords(const ConfigPtr& cfg,
                                          const Polynomial& a,
                                          std::int64_t deg_s) {
    std::vector<std::uint32_t> out(
        static_cast<std::size_t>(deg_s) * cfg->e(), 0);
    for (const auto& [exps, c] : a.terms()) {
        auto i = static_cast<std::size_t>(exps[0]);
        for (std::uint32_t j = 0; j < cfg->e(); ++j)
            out[i * cfg->e() + j] = cfg->digit(c, j);
    }
    return out;
}

Polynomial from_residue_coords(const ConfigPtr& cfg,
                               const std::vector<std::uint32_t>& coords) {
    const std::uint32_t e = cfg->e();
    Polynomial out(cfg);
    for (std::size_t i = 0; i * e < coords.size(); ++i) {
        std::vector<std::uint32_t> digits(coords.begin() + i * e,
                                          coords.begin() + (i + 1) * e);
        FqElem c = cfg->from_digits(digits);
        out.add_term(ExpVec{static_cast<std::int64_t>(i)}, c);
    }
    return out;
}

// Unique a with a^p = c in F_q[t]/(s), s squarefree. Frobenius is an
// F_p-linear bijection on this product of perfect fields; invert it by
// linear algebra on the digit coordinates.
Polynomial inverse_frobenius_mod(const Polynomial& c, const Polynomial& s) {
    ConfigPtr cfg = c.config();
    const std::uint32_t e = cfg->e();
    const auto deg_s = s.total_degree();
    const std::size_t dim = static_cast<std::size_t>(deg_s) * e;
    ModPMatrix m(dim, dim, cfg->p());
    Polynomial q(cfg), r(cfg);
    for (std::size_t i = 0; i < static_cast<std::size_t>(deg_s); ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
            FqElem gj = e == 1 ? FqElem(1)
                               : cfg->pow(cfg->from_code(cfg->p()), j);
            Polynomial b(cfg, ExpVec{static_cast<std::int64_t>(i)}, gj);
            Polynomial bp = b.pow(cfg->p());
            divmod_univariate(bp, s, q, r);
            auto col = residue_coords(cfg, r, deg_s);
            for (std::size_t row = 0; row < dim; ++row)
                m.at(row, i * e + j) = col[row];
        }
    }
    auto sol = m.solve(residue_coords(cfg, c, deg_s));
    if (!sol)
        throw PreconditionError(
            "inverse Frobenius failed; modulus not squarefree?");
    return from_residue_coords(cfg, *sol);
}

// Canonical coset representative of c modulo W = { a^p - a : a in F_q },
// together with the preimage of the removed part. For e = 1, W = {0}.
void reduce_constant(const ConfigPtr& cfg, FqElem c, FqElem& rep,
                     FqElem& preimage) {
    rep = c;
    preimage = 0;
    const std::uint32_t e = cfg->e();
    if (e == 1 || c == 0) return;
    FqElem current = c;
    FqElem a_total = 0;
    // Reduce against wp(g^k), k = 1..e-1, in pivot order (wp(1) = 0).
    for (std::uint32_t k = e; k-- > 1;) {
        FqElem gk = cfg->pow(cfg->from_code(cfg->p()), k);
        FqElem w = cfg->sub(cfg->frobenius(gk), gk);
        if (w == 0) continue;
        std::int32_t pivot = -1;
        for (std::int32_t row = static_cast<std::int32_t>(e) - 1; row >= 0;
             --row)
            if (cfg->digit(w, static_cast<std::uint32_t>(row)) != 0) {
                pivot = row;
                break;
            }
        std::uint32_t cd =
            cfg->digit(current, static_cast<std::uint32_t>(pivot));
        if (cd == 0) continue;
        std::uint32_t wd = cfg->digit(w, static_cast<std::uint32_t>(pivot));
        std::uint32_t winv = 1;
        for (std::uint32_t t = 0; t < cfg->p() - 2; ++t)
            winv = (winv * wd) % cfg->p();
        FqElem fscale = cfg->from_code((cd * winv) % cfg->p());
        current = cfg->sub(current, cfg->mul(fscale, w));
        a_total = cfg->add(a_total, cfg->mul(fscale, gk));
    }
    rep = current;
    preimage = a_total;
}

}  // namespace

ASReducedClass as_reduce(const RationalFunction& f) {
    ConfigPtr cfg = f.config();
    if (cfg->var_count() != 1)
        throw ConfigError("as_reduce requires a one-variable field");
    const std::uint32_t p = cfg->p();

    RationalFunction cur = f;
    RationalFunction witness(cfg);

    // Pole at infinity: kill leading monomials of the polynomial part while
    // their degree is positive and divisible by p.
    while (true) {
        Polynomial q(cfg), r(cfg);
        divmod_univariate(cur.numerator(), cur.denominator(), q, r);
        std::int64_t d = q.total_degree();
        if (d <= 0 || d % p != 0) break;
        Polynomial h(cfg, ExpVec{d / p}, cfg->pth_root(q.leading_coeff()));
        RationalFunction hr{h};
        cur = cur - (frobenius_scalar(hr) - hr);
        witness = witness + hr;
    }

    // Finite poles: while some squarefree denominator factor carries a
    // multiplicity divisible by p, subtract a wp-image cancelling the
    // leading part along that factor. Every subtraction strictly lowers the
    // multiplicity there and touches no other place (the correction term's
    // numerator degree stays below its denominator's), so the multiset of
    // p-divisible pole orders shrinks and the loop terminates.
    while (true) {
        auto sqf = squarefree_decomposition(cur.denominator());
        auto it = std::find_if(sqf.begin(), sqf.end(), [&](const auto& kv) {
            return kv.first % p == 0;
        });
        if (it == sqf.end()) break;
        const std::int64_t d = it->first;
        const Polynomial& s = it->second;
        Polynomial w = *cur.denominator().divided_by(s.pow(d));
        Polynomial q(cfg), r(cfg);
        divmod_univariate(cur.numerator() * invert_mod(w, s), s, q, r);
        Polynomial a = inverse_frobenius_mod(r, s);
        RationalFunction h(a, s.pow(d / p));
        cur = cur - (frobenius_scalar(h) - h);
        witness = witness + h;
    }

    // Constant coset: shift by wp of a constant to a fixed representative.
    {
        Polynomial q(cfg), r(cfg);
        divmod_univariate(cur.numerator(), cur.denominator(), q, r);
        FqElem rep = 0, pre = 0;
        reduce_constant(cfg, q.constant_value(), rep, pre);
        if (pre != 0) {
            RationalFunction h(cfg, pre);
            cur = cur - (frobenius_scalar(h) - h);
            witness = witness + h;
        }
    }

    ASReducedClass out{cur, cur.is_zero(), {}, witness};
    Polynomial q(cfg), r(cfg);
    divmod_univariate(cur.numerator(), cur.denominator(), q, r);
    if (q.total_degree() > 0)
        out.pole_data.emplace_back(true, Polynomial(cfg), q.total_degree());
    for (const auto& [d, s] : squarefree_decomposition(cur.denominator()))
        out.pole_data.emplace_back(false, s, d);
    return out;
}

}  // namespace charp
