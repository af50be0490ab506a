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

#include "charp/diff_form.hpp"

#include <algorithm>

namespace charp {

DifferentialForm::DifferentialForm(ConfigPtr cfg, std::uint32_t degree)
    : cfg_(std::move(cfg)), degree_(degree) {}

DifferentialForm::DifferentialForm(const RationalFunction& scalar)
    : cfg_(scalar.config()), degree_(0) {
    add_term(IndexTuple{}, scalar);
}

DifferentialForm DifferentialForm::d_variable(ConfigPtr cfg,
                                              const std::string& name) {
    DifferentialForm out(cfg, 1);
    IndexTuple idx{static_cast<std::uint32_t>(cfg->var_index(name))};
    out.add_term(idx, RationalFunction(std::move(cfg), FqElem(1)));
    return out;
}

void DifferentialForm::add_term(const IndexTuple& index,
                                const RationalFunction& c) {
    if (index.size() != degree_)
        throw PreconditionError("wedge index arity does not match degree");
    for (std::size_t i = 0; i + 1 < index.size(); ++i)
        if (index[i] >= index[i + 1])
            throw PreconditionError("wedge index tuple not increasing");
    if (!index.empty() && index.back() >= cfg_->var_count())
        throw ConfigError("wedge index out of range");
    if (c.is_zero()) return;
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
        coeffs_.emplace(index, c);
        return;
    }
    RationalFunction s = it->second + c;
    if (s.is_zero())
        coeffs_.erase(it);
    else
        it->second = s;
}

RationalFunction DifferentialForm::coeff(const IndexTuple& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? RationalFunction(cfg_) : it->second;
}

RationalFunction DifferentialForm::scalar_value() const {
    if (degree_ != 0)
        throw PreconditionError("scalar value of a positive-degree form");
    return coeff(IndexTuple{});
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out(cfg_, degree_);
    for (const auto& [i, c] : coeffs_) out.coeffs_.emplace(i, -c);
    return out;
}

DifferentialForm DifferentialForm::operator+(
    const DifferentialForm& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "form addition");
    if (degree_ != rhs.degree_)
        throw PreconditionError("cannot add forms of different degree");
    DifferentialForm out = *this;
    for (const auto& [i, c] : rhs.coeffs_) out.add_term(i, c);
    return out;
}

DifferentialForm DifferentialForm::operator-(
    const DifferentialForm& rhs) const {
    return *this + (-rhs);
}

bool DifferentialForm::operator==(const DifferentialForm& rhs) const {
    return *cfg_ == *rhs.cfg_ && degree_ == rhs.degree_ &&
           coeffs_ == rhs.coeffs_;
}

DifferentialForm DifferentialForm::scaled(const RationalFunction& c) const {
    DifferentialForm out(cfg_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [i, t] : coeffs_) out.coeffs_.emplace(i, t * c);
    return out;
}

DifferentialForm DifferentialForm::embedded(ConfigPtr target) const {
    DifferentialForm out(target, degree_);
    for (const auto& [i, c] : coeffs_) {
        IndexTuple ti(i.size());
        for (std::size_t k = 0; k < i.size(); ++k)
            ti[k] = static_cast<std::uint32_t>(
                target->var_index(cfg_->var_name(i[k])));
        std::sort(ti.begin(), ti.end());
        // Name-based remapping must preserve relative order, otherwise the
        // wedge sign would silently flip.
        for (std::size_t k = 0; k + 1 < ti.size(); ++k)
            if (static_cast<std::uint32_t>(
                    target->var_index(cfg_->var_name(i[k]))) > ti[k + 1])
                throw ConfigError(
                    "embedding permutes wedge slots; map variables in order");
        out.add_term(ti, c.embedded(target));
    }
    return out;
}

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return sign;
}

DifferentialForm exterior_d(const DifferentialForm& w) {
    ConfigPtr cfg = w.config();
    DifferentialForm out(cfg, w.degree() + 1);
    if (w.degree() + 1 > cfg->var_count()) return out;
    for (const auto& [index, c] : w.coefficients()) {
        for (std::size_t v = 0; v < cfg->var_count(); ++v) {
            RationalFunction dc = partial_derivative(c, v);
            if (dc.is_zero()) continue;
            IndexTuple dv{static_cast<std::uint32_t>(v)};
            IndexTuple merged;
            int sign = merge_sign(dv, index, merged);
            if (sign == 0) continue;
            out.add_term(merged, sign == 1 ? dc : -dc);
        }
    }
    return out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    require_same_config(*a.config(), *b.config(), "wedge");
    DifferentialForm out(a.config(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coefficients()) {
        for (const auto& [ib, cb] : b.coefficients()) {
            IndexTuple merged;
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            RationalFunction c = ca * cb;
            out.add_term(merged, sign == 1 ? c : -c);
        }
    }
    return out;
}

DifferentialForm dlog(const RationalFunction& f) {
    if (f.is_zero()) throw DomainError("dlog of zero");
    ConfigPtr cfg = f.config();
    DifferentialForm out(cfg, 1);
    for (std::size_t v = 0; v < cfg->var_count(); ++v) {
        RationalFunction c = partial_derivative(f, v) / f;
        if (c.is_zero()) continue;
        out.add_term(IndexTuple{static_cast<std::uint32_t>(v)}, c);
    }
    return out;
}

}  // namespace charp
