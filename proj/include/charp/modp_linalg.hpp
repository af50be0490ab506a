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

#ifndef CHARP_MODP_LINALG_HPP
#define CHARP_MODP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace charp {

/// Dense matrix over Z/p with row-reduction helpers. Small sizes only.
class ModPMatrix {
  public:
    ModPMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    std::uint32_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::size_t rank() const;

    /// Solves A x = b; nullopt when inconsistent. Free coordinates are 0.
    std::optional<std::vector<std::uint32_t>> solve(
        const std::vector<std::uint32_t>& b) const;

  private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;

    static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
};

}  // namespace charp

#endif
