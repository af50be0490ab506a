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

#ifndef CHARP_LOG_TERMS_HPP
#define CHARP_LOG_TERMS_HPP

#include <vector>

#include "charp/diff_form.hpp"

namespace charp {

/// One summand a * dlog(b_1) ^ ... ^ dlog(b_n).
struct LogTerm {
    RationalFunction a;
    std::vector<RationalFunction> logs;  // the b_i, all nonzero
};

/// Presentation sum_i a_i * dlog(b_{i,1}) ^ ... ^ dlog(b_{i,n}); the domain
/// of the Frobenius and Artin-Schreier maps. Two presentations are
/// presentation-equal when their sorted term lists coincide; equality of the
/// carried forms goes through log_to_form.
class LogTermSum {
  public:
    LogTermSum(ConfigPtr cfg, std::uint32_t degree);

    const ConfigPtr& config() const { return cfg_; }
    std::uint32_t degree() const { return degree_; }
    const std::vector<LogTerm>& term_list() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Appends a term; zero scalars are dropped, zero b_i rejected.
    void add_term(RationalFunction a, std::vector<RationalFunction> logs);

    LogTermSum operator+(const LogTermSum& rhs) const;

    /// Termwise canonical sort; presentation equality compares these.
    LogTermSum sorted() const;
    bool presentation_equal(const LogTermSum& rhs) const;

    LogTermSum embedded(ConfigPtr target) const;

  private:
    ConfigPtr cfg_;
    std::uint32_t degree_;
    std::vector<LogTerm> terms_;
};

/// Expansion of the presentation: sum_i a_i * dlog(b_{i,1}) ^ ...
DifferentialForm log_to_form(const LogTermSum& t);

/// Frobenius on presentations: a |-> a^p termwise, b_i untouched.
LogTermSum frobenius_phi(const LogTermSum& t);

/// The Artin-Schreier map: the form of the termwise (a^p - a) presentation.
DifferentialForm artin_schreier_map(const LogTermSum& t);

}  // namespace charp

#endif
