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

#include "charp/field_config.hpp"

#include <algorithm>
#include <set>

namespace charp {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct ConwayEntry {
    std::uint32_t p;
    std::uint32_t e;
    // Coefficients c_0..c_e of the monic modulus c_0 + c_1 x + ... + x^e.
    std::vector<std::uint32_t> coeffs;
};

// Conway polynomials for every prime power q = p^e <= 64 with e > 1.
const ConwayEntry kConwayTable[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {5, 2, {2, 4, 1}},
    {7, 2, {3, 6, 1}},
};

const ConwayEntry* find_conway(std::uint32_t p, std::uint32_t e) {
    for (const auto& entry : kConwayTable)
        if (entry.p == p && entry.e == e) return &entry;
    return nullptr;
}

}  // namespace

FieldConfig::FieldConfig(std::uint32_t p, std::uint32_t e,
                         std::vector<std::string> variables)
    : p_(p), e_(e), vars_(std::move(variables)) {
    if (!is_prime(p_))
        throw ConfigError("characteristic " + std::to_string(p_) +
                          " is not prime");
    if (e_ == 0) throw ConfigError("field extension degree must be positive");
    if (e_ == 1) {
        if (p_ > (1u << 30))
            throw ConfigError("prime " + std::to_string(p_) +
                              " exceeds the supported machine range");
        q_ = p_;
    } else {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e_; ++i) q *= p_;
        if (q > 64)
            throw ConfigError("F_" + std::to_string(q) +
                              " is not supported: extension fields are "
                              "limited to q <= 64");
        q_ = static_cast<std::uint32_t>(q);
        const ConwayEntry* entry = find_conway(p_, e_);
        if (entry == nullptr)
            throw ConfigError("no modulus table entry for (p, e) = (" +
                              std::to_string(p_) + ", " + std::to_string(e_) +
                              ")");
        build_tables(entry->coeffs);
    }
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw ConfigError("empty variable name");
        if (!seen.insert(v).second)
            throw ConfigError("duplicate variable name '" + v + "'");
    }
}

std::size_t FieldConfig::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw ConfigError("unknown variable '" + name + "'");
}

bool FieldConfig::has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

FqElem FieldConfig::from_code(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<FqElem>(r);
}

std::uint32_t FieldConfig::digit(FqElem a, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

FqElem FieldConfig::from_digits(const std::vector<std::uint32_t>& d) const {
    FqElem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + (d[i] % p_);
    return a;
}

FqElem FieldConfig::add(FqElem a, FqElem b) const {
    if (e_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<FqElem>(s >= p_ ? s - p_ : s);
    }
    FqElem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        out += ((da + db) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

FqElem FieldConfig::neg(FqElem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    FqElem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t da = a % p_;
        out += (da == 0 ? 0 : p_ - da) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

FqElem FieldConfig::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldConfig::mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) {
        return static_cast<FqElem>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::int64_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[static_cast<std::size_t>(s)];
}

FqElem FieldConfig::inv(FqElem a) const {
    if (a == 0) throw DomainError("division by zero in F_q");
    if (e_ == 1) return pow(a, static_cast<std::int64_t>(p_) - 2);
    std::int64_t s = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[static_cast<std::size_t>(s)];
}

FqElem FieldConfig::pow(FqElem a, std::int64_t n) const {
    if (n < 0) return inv(pow(a, -n));
    FqElem result = 1, base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

FqElem FieldConfig::pth_root(FqElem a) const {
    if (e_ == 1) return a;  // Frobenius is the identity on F_p
    return pow(a, q_ / p_);
}

FqElem FieldConfig::mul_poly(FqElem a, FqElem b,
                             const std::vector<std::uint32_t>& modulus) const {
    // Schoolbook product of base-p digit polynomials, reduced mod the modulus.
    std::vector<std::uint32_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::size_t d = prod.size(); d-- > e_;) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint32_t s = (c * (p_ - modulus[i])) % p_;
            prod[d - e_ + i] = (prod[d - e_ + i] + s) % p_;
        }
    }
    FqElem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += prod[i] * mult;
        mult *= p_;
    }
    return out;
}

void FieldConfig::build_tables(const std::vector<std::uint32_t>& modulus) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    FqElem g = p_;  // the class of x, a primitive root for a Conway modulus
    FqElem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        if (log_[cur] != -1)
            throw ConfigError("modulus table entry is not primitive");
        log_[cur] = static_cast<std::int32_t>(i);
        cur = mul_poly(cur, g, modulus);
    }
    if (cur != 1) throw ConfigError("modulus table entry is not primitive");
}

ConfigPtr make_config(std::uint32_t p, std::uint32_t e,
                      std::vector<std::string> variables) {
    return std::make_shared<FieldConfig>(p, e, std::move(variables));
}

void require_same_config(const FieldConfig& a, const FieldConfig& b,
                         const char* where) {
    if (!(a == b))
        throw ConfigError(std::string(where) +
                          ": operands live over different field "
                          "configurations");
}

}  // namespace charp
