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

#ifndef CHARP_TEST_SUPPORT_HPP
#define CHARP_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "charp/rational.hpp"

namespace charp::test {

inline Polynomial monomial(const ConfigPtr& cfg, const ExpVec& e,
                           FqElem c = 1) {
    return Polynomial(cfg, e, c);
}

inline RationalFunction rf_var(const ConfigPtr& cfg, const std::string& v) {
    return RationalFunction::variable(cfg, v);
}

inline RationalFunction rf_const(const ConfigPtr& cfg, std::int64_t c) {
    return RationalFunction(cfg, cfg->from_code(c));
}

}  // namespace charp::test

#endif
