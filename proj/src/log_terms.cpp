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

#include "charp/log_terms.hpp"

#include <algorithm>

namespace charp {

LogTermSum::LogTermSum(ConfigPtr cfg, std::uint32_t degree)
    : cfg_(std::move(cfg)), degree_(degree) {}

void LogTermSum::add_term(RationalFunction a,
                          std::vector<RationalFunction> logs) {
    if (logs.size() != degree_)
        throw PreconditionError("log term arity does not match degree");
    if (a.is_zero()) return;
    for (const auto& b : logs)
        if (b.is_zero()) throw DomainError("dlog of zero in log term");
    terms_.push_back(LogTerm{std::move(a), std::move(logs)});
}

LogTermSum LogTermSum::operator+(const LogTermSum& rhs) const {
    require_same_config(*cfg_, *rhs.cfg_, "log term sum addition");
    if (degree_ != rhs.degree_)
        throw PreconditionError("cannot add log term sums of different degree");
    LogTermSum out = *this;
    for (const auto& t : rhs.terms_) out.terms_.push_back(t);
    return out;
}

LogTermSum LogTermSum::sorted() const {
    LogTermSum out = *this;
    auto term_less = [](const LogTerm& x, const LogTerm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.logs.size() != y.logs.size())
            return x.logs.size() < y.logs.size();
        for (std::size_t i = 0; i < x.logs.size(); ++i) {
            if (x.logs[i] != y.logs[i]) return x.logs[i] < y.logs[i];
        }
        return false;
    };
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

bool LogTermSum::presentation_equal(const LogTermSum& rhs) const {
    if (!(*cfg_ == *rhs.cfg_) || degree_ != rhs.degree_) return false;
    LogTermSum a = sorted(), b = rhs.sorted();
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].a != b.terms_[i].a ||
            a.terms_[i].logs != b.terms_[i].logs)
            return false;
    }
    return true;
}

LogTermSum LogTermSum::embedded(ConfigPtr target) const {
    LogTermSum out(target, degree_);
    for (const auto& t : terms_) {
        std::vector<RationalFunction> logs;
        logs.reserve(t.logs.size());
        for (const auto& b : t.logs) logs.push_back(b.embedded(target));
        out.add_term(t.a.embedded(target), std::move(logs));
    }
    return out;
}

DifferentialForm log_to_form(const LogTermSum& t) {
    DifferentialForm acc(t.config(), t.degree());
    for (const auto& term : t.term_list()) {
        DifferentialForm part(DifferentialForm(term.a));
        for (const auto& b : term.logs) part = wedge(part, dlog(b));
        if (part.degree() != t.degree())
            throw PreconditionError("log term expansion degree mismatch");
        acc = acc + part;
    }
    return acc;
}

LogTermSum frobenius_phi(const LogTermSum& t) {
    LogTermSum out(t.config(), t.degree());
    for (const auto& term : t.term_list())
        out.add_term(frobenius_scalar(term.a), term.logs);
    return out;
}

DifferentialForm artin_schreier_map(const LogTermSum& t) {
    LogTermSum diff(t.config(), t.degree());
    for (const auto& term : t.term_list())
        diff.add_term(frobenius_scalar(term.a) - term.a, term.logs);
    return log_to_form(diff);
}

}  // namespace charp
