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

#include "charp/kp.hpp"

#include <sstream>

#include "charp/modp_linalg.hpp"

namespace charp {

RationalFunction KpCoordinates::reassemble() const {
    if (coords.empty() && basis.empty())
        throw PreconditionError("cannot reassemble empty expansion");
    ConfigPtr cfg = basis.empty() ? coords.begin()->second.config()
                                  : basis.front().config();
    RationalFunction acc(cfg);
    for (const auto& [e, fe] : coords) {
        RationalFunction term = fe.pow(cfg->p());
        for (std::size_t i = 0; i < basis.size(); ++i)
            term = term * RationalFunction(basis[i]).pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

bool monomials_p_independent(const std::vector<Polynomial>& monomials) {
    if (monomials.empty()) return true;
    ConfigPtr cfg = monomials.front().config();
    std::size_t m = cfg->var_count();
    ModPMatrix mat(m, monomials.size(), cfg->p());
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        const Polynomial& mono = monomials[j];
        if (!mono.is_monomial() || mono.is_zero())
            throw PreconditionError("p-basis candidates must be monomials");
        const ExpVec& e = mono.leading_exponents();
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t r = e[i] % cfg->p();
            mat.at(i, j) = static_cast<std::uint32_t>(r);
        }
    }
    return mat.rank() == monomials.size();
}

std::vector<Polynomial> standard_p_basis(const ConfigPtr& cfg) {
    std::vector<Polynomial> out;
    out.reserve(cfg->var_count());
    for (const auto& name : cfg->variables())
        out.push_back(Polynomial::variable(cfg, name));
    return out;
}

namespace {

bool is_standard_basis(const std::vector<Polynomial>& basis,
                       const ConfigPtr& cfg) {
    if (basis.size() != cfg->var_count()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!basis[j].is_monomial() || basis[j].leading_coeff() != 1)
            return false;
        const ExpVec& e = basis[j].leading_exponents();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

std::string residue_class_text(const ConfigPtr& cfg,
                               const std::vector<std::uint32_t>& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ",";
        os << cfg->var_name(i) << "^" << r[i];
    }
    return os.str();
}

}  // namespace

KpCoordinates kp_expand(const RationalFunction& f,
                        const std::vector<Polynomial>& basis) {
    ConfigPtr cfg = f.config();
    const std::uint32_t p = cfg->p();
    const std::size_t m = cfg->var_count();
    const std::size_t s = basis.size();

    const bool standard = is_standard_basis(basis, cfg);
    if (!standard && !monomials_p_independent(basis))
        throw PreconditionError("p-dependent basis candidates in kp_expand");

    KpCoordinates out;
    out.basis = basis;
    if (f.is_zero()) return out;

    // f = u/v = w / v^p with w = u v^{p-1}: all p-th power structure of the
    // denominator is absorbed, so only w's exponent classes mod p matter.
    const Polynomial& v = f.denominator();
    Polynomial w =
        f.numerator() * v.pow(static_cast<std::int64_t>(p) - 1);

    // Group the terms of w by exponent residue class mod p.
    std::map<std::vector<std::uint32_t>, Polynomial> classes;
    for (const auto& [e, c] : w.terms()) {
        std::vector<std::uint32_t> r(m);
        for (std::size_t i = 0; i < m; ++i)
            r[i] = static_cast<std::uint32_t>(e[i] % p);
        auto it = classes.find(r);
        if (it == classes.end())
            it = classes.emplace(r, Polynomial(cfg)).first;
        it->second.add_term(e, c);
    }

    // Basis exponent matrix mod p (columns = basis monomials).
    ModPMatrix mat(m, s, p);
    for (std::size_t j = 0; j < s; ++j) {
        const ExpVec& be = basis[j].leading_exponents();
        for (std::size_t i = 0; i < m; ++i)
            mat.at(i, j) = static_cast<std::uint32_t>(be[i] % p);
    }

    for (auto& [r, wr] : classes) {
        // Solve A e = r (mod p); p-independence makes the solution unique.
        auto e_opt = mat.solve(r);
        if (!e_opt)
            throw MembershipError(
                "element lies outside K^p of the given basis",
                residue_class_text(cfg, r));
        MultiIndex e(s);
        for (std::size_t j = 0; j < s; ++j) e[j] = (*e_opt)[j] % p;

        // w_r = x^r * g_r^p. Peel x^r off and take the p-th root.
        Polynomial shifted(cfg);
        for (const auto& [exps, c] : wr.terms()) {
            ExpVec t(exps);
            for (std::size_t i = 0; i < m; ++i) t[i] -= r[i];
            shifted.add_term(t, c);
        }
        Polynomial g_r = shifted.pth_root();

        // Basis monomial value a^e has exponents A e over Z; the leftover
        // x^{(r - A e)/p} joins the coordinate (entries may be negative).
        ExpVec ae(m, 0);
        for (std::size_t j = 0; j < s; ++j) {
            const ExpVec& be = basis[j].leading_exponents();
            for (std::size_t i = 0; i < m; ++i)
                ae[i] = checked_add(ae[i], checked_mul(be[i], e[j]));
        }
        ExpVec pos(m, 0), negv(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t diff = static_cast<std::int64_t>(r[i]) - ae[i];
            if (diff % static_cast<std::int64_t>(p) != 0)
                throw MembershipError(
                    "element lies outside K^p of the given basis",
                    residue_class_text(cfg, r));
            std::int64_t d = diff / static_cast<std::int64_t>(p);
            if (d >= 0)
                pos[i] = d;
            else
                negv[i] = -d;
        }
        FqElem coeff_scale = 1;
        for (std::size_t j = 0; j < s; ++j) {
            FqElem bc = basis[j].leading_coeff();
            if (bc != 1)
                coeff_scale = cfg->mul(
                    coeff_scale, cfg->pth_root(cfg->inv(cfg->pow(bc, e[j]))));
        }
        RationalFunction fe(g_r * Polynomial(cfg, pos, FqElem(1)),
                            v * Polynomial(cfg, negv, FqElem(1)));
        fe = fe.scaled(coeff_scale);
        if (!fe.is_zero()) {
            auto [it, fresh] = out.coords.emplace(e, fe);
            if (!fresh) {
                RationalFunction sum = it->second + fe;
                if (sum.is_zero())
                    out.coords.erase(it);
                else
                    it->second = sum;
            }
        }
    }
    return out;
}

KpCoordinates kp_expand(const RationalFunction& f) {
    return kp_expand(f, standard_p_basis(f.config()));
}

}  // namespace charp
