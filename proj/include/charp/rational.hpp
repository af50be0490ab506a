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

#ifndef CHARP_RATIONAL_HPP
#define CHARP_RATIONAL_HPP

#include "charp/polynomial.hpp"

namespace charp {

/// Element of F_q(x_1,...,x_m) as a normalized fraction: gcd(num, den) = 1
/// and den monic in graded-lex. Equal values have identical representations,
/// so operator== decides functional equality.
class RationalFunction {
  public:
    explicit RationalFunction(ConfigPtr cfg);
    RationalFunction(ConfigPtr cfg, FqElem constant);
    explicit RationalFunction(const Polynomial& num);
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction variable(ConfigPtr cfg, const std::string& name);

    const ConfigPtr& config() const { return num_.config(); }
    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const {
        return num_.is_constant() && den_.is_constant();
    }
    bool is_polynomial() const { return den_.is_one(); }
    bool uses_var(std::size_t var) const {
        return num_.uses_var(var) || den_.uses_var(var);
    }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    bool operator==(const RationalFunction& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunction& rhs) const {
        return !(*this == rhs);
    }
    /// Order solely for use as container key.
    bool operator<(const RationalFunction& rhs) const;

    RationalFunction scaled(FqElem c) const;
    RationalFunction inverse() const;
    RationalFunction pow(std::int64_t n) const;

    RationalFunction embedded(ConfigPtr target) const {
        return RationalFunction(num_.embedded(target), den_.embedded(target));
    }

  private:
    struct AlreadyNormalized {};
    RationalFunction(Polynomial num, Polynomial den, AlreadyNormalized)
        : num_(std::move(num)), den_(std::move(den)) {}

    friend RationalFunction frobenius_scalar(const RationalFunction& f);

    Polynomial num_;
    Polynomial den_;
    void normalize();
};

/// d(f)/d(x) with the quotient rule applied exactly.
RationalFunction partial_derivative(const RationalFunction& f,
                                    const std::string& var);
RationalFunction partial_derivative(const RationalFunction& f,
                                    std::size_t var);

/// f^p.
RationalFunction frobenius_scalar(const RationalFunction& f);

/// True iff f lies in K^p, i.e. all partial derivatives vanish.
bool is_pth_power(const RationalFunction& f);

/// Unique g with g^p = f. Throws DomainError carrying a witness variable
/// with nonzero partial derivative when f is not a p-th power.
RationalFunction pth_root(const RationalFunction& f);

}  // namespace charp

#endif
