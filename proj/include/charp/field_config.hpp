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

#ifndef CHARP_FIELD_CONFIG_HPP
#define CHARP_FIELD_CONFIG_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

/// Element of F_q, encoded as an integer in [0, q). For q = p^e the base-p
/// digits of the code are the coordinates in the polynomial basis
/// 1, g, ..., g^{e-1} of the fixed irreducible modulus.
using FqElem = std::uint32_t;

/// Ambient field description: F_q with q = p^e and an ordered list of
/// transcendental variable names. All arithmetic on FqElem values goes
/// through this class. Immutable after construction; shared by every object
/// built over the field.
///
/// For e > 1 the modulus is a fixed Conway polynomial from an internal table
/// covering q <= 64; larger non-prime q is rejected so that representations
/// are identical across runs and platforms.
class FieldConfig {
  public:
    FieldConfig(std::uint32_t p, std::uint32_t e,
                std::vector<std::string> variables);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }
    /// Index of a variable name; throws ConfigError if unknown.
    std::size_t var_index(const std::string& name) const;
    bool has_var(const std::string& name) const;
    const std::string& var_name(std::size_t i) const { return vars_.at(i); }

    /// Same field parameters (p, e); variable lists may differ.
    bool same_field(const FieldConfig& other) const {
        return p_ == other.p_ && e_ == other.e_;
    }
    bool operator==(const FieldConfig& other) const {
        return same_field(other) && vars_ == other.vars_;
    }

    // --- F_q arithmetic -----------------------------------------------

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }
    /// Integer literal as a field element: the code n mod q. For e = 1 this
    /// is the usual reduction mod p; for e > 1 codes address the whole field
    /// (base-p digits in the polynomial basis), which the text grammar relies
    /// on for exact print/parse round-trips.
    FqElem from_code(std::int64_t n) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, std::int64_t n) const;
    /// Frobenius a -> a^p.
    FqElem frobenius(FqElem a) const { return pow(a, p_); }
    /// Unique b with b^p = a (F_q is perfect): b = a^{q/p}.
    FqElem pth_root(FqElem a) const;

    /// Base-p digit i of the code (coordinate w.r.t. the polynomial basis).
    std::uint32_t digit(FqElem a, std::uint32_t i) const;
    FqElem from_digits(const std::vector<std::uint32_t>& d) const;

  private:
    std::uint32_t p_;
    std::uint32_t e_;
    std::uint32_t q_;
    std::vector<std::string> vars_;

    // e > 1: Zech-style discrete log/antilog tables over the Conway modulus.
    std::vector<FqElem> exp_;      // exp_[i] = g^i, i in [0, q-1)
    std::vector<std::int32_t> log_;  // log_[a] for a != 0

    void build_tables(const std::vector<std::uint32_t>& modulus);
    FqElem mul_poly(FqElem a, FqElem b,
                    const std::vector<std::uint32_t>& modulus) const;
};

using ConfigPtr = std::shared_ptr<const FieldConfig>;

/// Convenience factory.
ConfigPtr make_config(std::uint32_t p, std::uint32_t e,
                      std::vector<std::string> variables);

/// Throws ConfigError unless both objects live over equal configs.
void require_same_config(const FieldConfig& a, const FieldConfig& b,
                         const char* where);

}  // namespace charp

#endif
