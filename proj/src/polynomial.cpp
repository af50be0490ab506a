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

#include "charp/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace charp {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("exponent addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("exponent multiplication overflow");
    return out;
}

bool GradedLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    std::int64_t da = 0, db = 0;
    for (auto e : a) da = checked_add(da, e);
    for (auto e : b) db = checked_add(db, e);
    if (da != db) return da > db;
    return a > b;  // lexicographic on the declared variable order
}

Polynomial::Polynomial(ConfigPtr cfg) : cfg_(std::move(cfg)) {}

Polynomial::Polynomial(ConfigPtr cfg, FqElem constant) : cfg_(std::move(cfg)) {
    if (constant != 0) terms_.emplace(ExpVec(cfg_->var_count(), 0), constant);
}

Polynomial::Polynomial(ConfigPtr cfg, const ExpVec& exps, FqElem c)
    : cfg_(std::move(cfg)) {
    if (exps.size() != cfg_->var_count())
        throw ConfigError("exponent vector length mismatch");
    for (auto e : exps)
        if (e < 0) throw DomainError("negative exponent in polynomial term");
    if (c != 0) terms_.emplace(exps, c);
}

Polynomial Polynomial::variable(ConfigPtr cfg, const std::string& name) {
    ExpVec e(cfg->var_count(), 0);
    e[cfg->var_index(name)] = 1;
    return Polynomial(std::move(cfg), e, 1);
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(),
                       terms_.begin()->first.end(),
                       [](std::int64_t e) { return e == 0; });
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

FqElem Polynomial::constant_value() const {
    ExpVec zero(cfg_->var_count(), 0);
    return coeff(zero);
}

std::int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    std::int64_t d = 0;  // leading term has maximal total degree
    for (auto e : terms_.begin()->first) d = checked_add(d, e);
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool Polynomial::uses_var(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

const ExpVec& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->first;
}

FqElem Polynomial::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::add_term(const ExpVec& exps, FqElem c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    FqElem s = cfg_->add(it->second, c);
    if (s == 0)
        terms_.erase(it);
    else
        it->second = s;
}

FqElem Polynomial::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(cfg_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, cfg_->neg(c));
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "polynomial addition");
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "polynomial subtraction");
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, cfg_->neg(c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "polynomial multiplication");
    Polynomial out(cfg_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = checked_add(ea[i], eb[i]);
            out.add_term(e, cfg_->mul(ca, cb));
        }
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return *cfg_ == *rhs.cfg_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::scaled(FqElem c) const {
    Polynomial out(cfg_);
    if (c == 0) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, cfg_->mul(t, c));
    return out;
}

Polynomial Polynomial::pow(std::int64_t n) const {
    if (n < 0) throw DomainError("negative polynomial power");
    Polynomial result(cfg_, FqElem(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        if (n >>= 1) base = base * base;
    }
    return result;
}

Polynomial Polynomial::frobenius() const {
    Polynomial out(cfg_);
    for (const auto& [e, c] : terms_) {
        ExpVec pe(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            pe[i] = checked_mul(e[i], cfg_->p());
        out.terms_.emplace(pe, cfg_->frobenius(c));
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out(cfg_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        FqElem m = cfg_->mul(c, cfg_->from_code(e[var] % cfg_->p()));
        if (m == 0) continue;
        ExpVec d = e;
        --d[var];
        out.add_term(d, m);
    }
    return out;
}

bool Polynomial::is_pth_power() const {
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x % cfg_->p() != 0) return false;
    return true;
}

Polynomial Polynomial::pth_root() const {
    Polynomial out(cfg_);
    for (const auto& [e, c] : terms_) {
        ExpVec r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] % cfg_->p() != 0)
                throw DomainError("polynomial is not a p-th power",
                                  cfg_->var_name(i));
            r[i] = e[i] / cfg_->p();
        }
        out.terms_.emplace(r, cfg_->pth_root(c));
    }
    return out;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "polynomial division");
    if (rhs.is_zero()) throw DomainError("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(cfg_);
    const ExpVec& lead = rhs.leading_exponents();
    FqElem lc_inv = cfg_->inv(rhs.leading_coeff());
    while (!rem.is_zero()) {
        const ExpVec& re = rem.leading_exponents();
        ExpVec qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            qe[i] = re[i] - lead[i];
            if (qe[i] < 0) return std::nullopt;
        }
        FqElem qc = cfg_->mul(rem.leading_coeff(), lc_inv);
        Polynomial t(cfg_, qe, qc);
        quot.add_term(qe, qc);
        rem = rem - t * rhs;
        // Graded-lex leading terms are multiplicative, so the leading term
        // of rem strictly drops each round; a failed monomial quotient above
        // certifies non-divisibility.
    }
    return quot;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(cfg_->inv(leading_coeff()));
}

namespace {

// Dense view of f as a univariate polynomial in variable `var` with
// Polynomial coefficients (index = degree).
std::vector<Polynomial> split_by_var(const Polynomial& f, std::size_t var) {
    std::int64_t d = f.degree_in(var);
    std::vector<Polynomial> out(static_cast<std::size_t>(d + 1),
                                Polynomial(f.config()));
    for (const auto& [e, c] : f.terms()) {
        ExpVec rest = e;
        std::int64_t k = rest[var];
        rest[var] = 0;
        out[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return out;
}

Polynomial join_by_var(const std::vector<Polynomial>& coeffs, std::size_t var,
                       ConfigPtr cfg) {
    Polynomial out(cfg);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            ExpVec full = e;
            full[var] = checked_add(full[var], static_cast<std::int64_t>(k));
            out.add_term(full, c);
        }
    }
    return out;
}

Polynomial content_in_var(const std::vector<Polynomial>& coeffs) {
    Polynomial g(coeffs.front().config());
    for (const auto& c : coeffs) g = Polynomial::gcd(g, c);
    return g;
}

// Remainder-up-to-content of dense univariate-in-var polynomials over the
// coefficient ring F_q[other vars]. Only the primitive part of the result
// matters to the PRS, so each elimination step divides by the cofactor gcd
// and strips content to keep coefficient growth linear.
std::vector<Polynomial> reduced_rem(std::vector<Polynomial> f,
                                    const std::vector<Polynomial>& g) {
    auto deg = [](const std::vector<Polynomial>& h) {
        return static_cast<std::int64_t>(h.size()) - 1;
    };
    const Polynomial& lg = g.back();
    while (deg(f) >= deg(g) && !f.empty()) {
        std::int64_t shift = deg(f) - deg(g);
        const Polynomial lf = f.back();
        Polynomial d = Polynomial::gcd(lf, lg);
        Polynomial cf = *lg.divided_by(d);
        Polynomial cg = *lf.divided_by(d);
        // f <- (lg/d) * f - (lf/d) * x^shift * g
        for (auto& c : f) c = cf * c;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::size_t j = i + static_cast<std::size_t>(shift);
            f[j] = f[j] - cg * g[i];
        }
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        if (!f.empty()) {
            Polynomial c = content_in_var(f);
            if (!c.is_one())
                for (auto& x : f) x = *x.divided_by(c);
        }
    }
    return f;
}

}  // namespace

namespace {

// gcd of a monomial with an arbitrary polynomial: per-variable minimum of
// the monomial's exponents against every term.
Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& f) {
    ExpVec g = mono.leading_exponents();
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] = std::min(g[i], e[i]);
        if (std::all_of(g.begin(), g.end(),
                        [](std::int64_t x) { return x == 0; }))
            break;
    }
    return Polynomial(f.config(), g, FqElem(1));
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    require_same_config(*a.cfg_, *b.cfg_, "polynomial gcd");
    ConfigPtr cfg = a.cfg_;
    if (a.is_constant() || b.is_constant())
        return Polynomial(cfg, FqElem(1));
    if (a.is_monomial()) return monomial_gcd(a, b);
    if (b.is_monomial()) return monomial_gcd(b, a);
    if (a == b) return a.monic();

    // Strip monomial content up front; it often exposes the p-th power
    // shortcut below and always shortens the remainder sequence.
    Polynomial ma = monomial_gcd(Polynomial(cfg, a.leading_exponents(),
                                            FqElem(1)),
                                 a);
    Polynomial mb = monomial_gcd(Polynomial(cfg, b.leading_exponents(),
                                            FqElem(1)),
                                 b);
    if (!ma.is_one() || !mb.is_one()) {
        Polynomial common = monomial_gcd(ma, mb);
        return (common * gcd(*a.divided_by(ma), *b.divided_by(mb))).monic();
    }

    // Frobenius keeps fractions sparse in char p, so whole p-th powers are
    // a dominant shape here: gcd(f^p, g^p) = gcd(f, g)^p.
    if (a.is_pth_power() && b.is_pth_power())
        return gcd(a.pth_root(), b.pth_root()).pow(cfg->p()).monic();

    // Main variable: prefer a variable used by both operands, the one of
    // smallest combined degree (shortest remainder sequence).
    std::size_t m = cfg->var_count();
    std::size_t main_var = m;
    std::int64_t best = -1;
    for (std::size_t i = 0; i < m; ++i) {
        bool ina = a.uses_var(i), inb = b.uses_var(i);
        if (!ina && !inb) continue;
        std::int64_t d = std::max(a.degree_in(i), b.degree_in(i));
        if (!(ina && inb)) d += 1000000;  // fall back to one-sided variables
        if (main_var == m || d < best) {
            main_var = i;
            best = d;
        }
    }
    if (main_var == m) return Polynomial(cfg, FqElem(1));  // both constants

    auto fa = split_by_var(a, main_var);
    auto fb = split_by_var(b, main_var);
    Polynomial ca = content_in_var(fa);
    Polynomial cb = content_in_var(fb);
    Polynomial cg = gcd(ca, cb);

    auto divide_all = [](std::vector<Polynomial>& v, const Polynomial& d) {
        for (auto& c : v) {
            auto q = c.divided_by(d);
            c = *q;  // content divides every coefficient by construction
        }
    };
    divide_all(fa, ca);
    divide_all(fb, cb);

    // Primitive PRS on the primitive parts.
    auto pp = [&](std::vector<Polynomial> v) {
        Polynomial c = content_in_var(v);
        divide_all(v, c);
        return v;
    };
    std::vector<Polynomial> f = fa, g = fb;
    if (f.size() < g.size()) std::swap(f, g);
    while (true) {
        auto r = reduced_rem(f, g);
        if (r.empty()) break;
        f = std::move(g);
        g = pp(std::move(r));
        if (f.size() < g.size()) std::swap(f, g);
    }
    Polynomial prim = join_by_var(g, main_var, cfg);
    return (cg * prim).monic();
}

Polynomial Polynomial::embedded(ConfigPtr target) const {
    if (!cfg_->same_field(*target))
        throw ConfigError("cannot embed across different base fields");
    std::vector<std::size_t> map(cfg_->var_count());
    std::vector<bool> mapped(cfg_->var_count(), false);
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        ExpVec te(target->var_count(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mapped[i]) {
                map[i] = target->var_index(cfg_->var_name(i));
                mapped[i] = true;
            }
            te[map[i]] = e[i];
        }
        out.add_term(te, c);
    }
    return out;
}

std::vector<FqElem> to_dense_univariate(const Polynomial& f) {
    if (f.config()->var_count() != 1)
        throw ConfigError("univariate operation on multivariate polynomial");
    std::vector<FqElem> out(static_cast<std::size_t>(f.total_degree() + 1), 0);
    for (const auto& [e, c] : f.terms())
        out[static_cast<std::size_t>(e[0])] = c;
    return out;
}

Polynomial from_dense_univariate(ConfigPtr cfg,
                                 const std::vector<FqElem>& coeffs) {
    Polynomial out(cfg);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.add_term(ExpVec{static_cast<std::int64_t>(i)}, coeffs[i]);
    return out;
}

void divmod_univariate(const Polynomial& f, const Polynomial& g,
                       Polynomial& quot, Polynomial& rem) {
    if (g.is_zero()) throw DomainError("univariate division by zero");
    ConfigPtr cfg = f.config();
    quot = Polynomial(cfg);
    rem = f;
    FqElem lc_inv = cfg->inv(g.leading_coeff());
    std::int64_t dg = g.total_degree();
    while (!rem.is_zero() && rem.total_degree() >= dg) {
        std::int64_t shift = rem.total_degree() - dg;
        FqElem c = cfg->mul(rem.leading_coeff(), lc_inv);
        Polynomial t(cfg, ExpVec{shift}, c);
        quot = quot + t;
        rem = rem - t * g;
    }
}

std::map<std::int64_t, Polynomial> squarefree_decomposition(
    const Polynomial& f) {
    std::map<std::int64_t, Polynomial> result;
    if (f.is_constant()) return result;
    ConfigPtr cfg = f.config();
    Polynomial g = f.monic();
    Polynomial fp = g.derivative(0);
    Polynomial leftover(cfg, FqElem(1));
    if (fp.is_zero()) {
        leftover = g;
    } else {
        Polynomial c = Polynomial::gcd(g, fp);
        Polynomial h = *g.divided_by(c);  // product of factors with p∤mult
        std::int64_t i = 1;
        while (!h.is_one()) {
            Polynomial hh = Polynomial::gcd(h, c);
            Polynomial z = *h.divided_by(hh);
            if (!z.is_one()) result.emplace(i, z.monic());
            h = hh;
            c = *c.divided_by(hh);
            ++i;
        }
        leftover = c;  // all remaining multiplicities divisible by p
    }
    if (!leftover.is_one()) {
        Polynomial w = leftover.pth_root();
        for (const auto& [j, s] : squarefree_decomposition(w)) {
            auto [it, fresh] = result.emplace(j * cfg->p(), s);
            if (!fresh) it->second = (it->second * s).monic();
        }
    }
    return result;
}

}  // namespace charp
