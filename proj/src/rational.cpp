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

#include "charp/rational.hpp"

namespace charp {

RationalFunction::RationalFunction(ConfigPtr cfg)
    : num_(cfg), den_(cfg, FqElem(1)) {}

RationalFunction::RationalFunction(ConfigPtr cfg, FqElem constant)
    : num_(cfg, constant), den_(cfg, FqElem(1)) {}

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(num.config(), FqElem(1)) {}

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den)
    : num_(num), den_(den) {
    require_same_config(*num.config(), *den.config(), "rational function");
    if (den_.is_zero()) throw DomainError("zero denominator");
    normalize();
}

RationalFunction RationalFunction::variable(ConfigPtr cfg,
                                            const std::string& name) {
    return RationalFunction(Polynomial::variable(std::move(cfg), name));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(num_.config(), FqElem(1));
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divided_by(g);
            den_ = *den_.divided_by(g);
        }
    }
    FqElem lc = den_.leading_coeff();
    if (lc != 1) {
        FqElem inv = num_.config()->inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator+(
    const RationalFunction& rhs) const {
    if (den_ == rhs.den_)
        return RationalFunction(num_ + rhs.num_, den_);
    // Classic denominator-gcd form keeps intermediate degrees down.
    Polynomial g = Polynomial::gcd(den_, rhs.den_);
    if (g.is_one())
        return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_,
                                den_ * rhs.den_);
    Polynomial da = *den_.divided_by(g);
    Polynomial db = *rhs.den_.divided_by(g);
    return RationalFunction(num_ * db + rhs.num_ * da, den_ * db);
}

RationalFunction RationalFunction::operator-(
    const RationalFunction& rhs) const {
    return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(
    const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(
    const RationalFunction& rhs) const {
    if (rhs.is_zero()) throw DomainError("division by zero");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

bool RationalFunction::operator<(const RationalFunction& rhs) const {
    GradedLexGreater gt;
    auto poly_less = [&](const Polynomial& a, const Polynomial& b) {
        auto ia = a.terms().begin(), ea = a.terms().end();
        auto ib = b.terms().begin(), eb = b.terms().end();
        for (; ia != ea && ib != eb; ++ia, ++ib) {
            if (gt(ia->first, ib->first)) return false;
            if (gt(ib->first, ia->first)) return true;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ib != eb;
    };
    if (num_ != rhs.num_) return poly_less(num_, rhs.num_);
    return poly_less(den_, rhs.den_);
}

RationalFunction RationalFunction::scaled(FqElem c) const {
    RationalFunction out = *this;
    out.num_ = out.num_.scaled(c);
    if (c == 0) out.den_ = Polynomial(config(), FqElem(1));
    return out;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    if (n == 0) return RationalFunction(config(), FqElem(1));
    if (is_zero()) return *this;
    // Coprimality and the monic denominator survive taking powers.
    return RationalFunction(num_.pow(n), den_.pow(n), AlreadyNormalized{});
}

RationalFunction partial_derivative(const RationalFunction& f,
                                    std::size_t var) {
    if (var >= f.config()->var_count())
        throw ConfigError("variable index out of range");
    const Polynomial& u = f.numerator();
    const Polynomial& v = f.denominator();
    return RationalFunction(u.derivative(var) * v - u * v.derivative(var),
                            v * v);
}

RationalFunction partial_derivative(const RationalFunction& f,
                                    const std::string& var) {
    return partial_derivative(f, f.config()->var_index(var));
}

RationalFunction frobenius_scalar(const RationalFunction& f) {
    // Coprimality and the monic denominator survive the Frobenius.
    return RationalFunction(f.num_.frobenius(), f.den_.frobenius(),
                            RationalFunction::AlreadyNormalized{});
}

bool is_pth_power(const RationalFunction& f) {
    // u/v = (u v^{p-1}) / v^p and the denominator is a p-th power, so f is
    // one iff the combined numerator is, iff all its exponents are 0 mod p.
    Polynomial w =
        f.numerator() *
        f.denominator().pow(static_cast<std::int64_t>(f.config()->p()) - 1);
    return w.is_pth_power();
}

RationalFunction pth_root(const RationalFunction& f) {
    if (f.is_zero()) return f;
    ConfigPtr cfg = f.config();
    Polynomial w =
        f.numerator() *
        f.denominator().pow(static_cast<std::int64_t>(cfg->p()) - 1);
    if (!w.is_pth_power()) {
        for (std::size_t i = 0; i < cfg->var_count(); ++i) {
            if (!partial_derivative(f, i).is_zero())
                throw DomainError("not a p-th power", cfg->var_name(i));
        }
        throw DomainError("not a p-th power");
    }
    return RationalFunction(w.pth_root(), f.denominator());
}

}  // namespace charp
