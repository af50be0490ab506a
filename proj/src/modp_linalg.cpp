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

#include "charp/modp_linalg.hpp"

namespace charp {

std::uint32_t ModPMatrix::inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t result = 1, base = a % p;
    std::uint32_t n = p - 2;
    while (n > 0) {
        if (n & 1) result = (result * base) % p;
        base = (base * base) % p;
        n >>= 1;
    }
    return result;
}

std::size_t ModPMatrix::rank() const {
    ModPMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(m.at(rank, c), m.at(pivot, c));
        std::uint32_t inv = inv_mod(m.at(rank, col), p_);
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(rank, c) = (m.at(rank, c) * inv) % p_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            std::uint32_t factor = m.at(r, col);
            for (std::size_t c = 0; c < cols_; ++c) {
                std::uint32_t sub = (factor * m.at(rank, c)) % p_;
                m.at(r, c) = (m.at(r, c) + p_ - sub) % p_;
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::uint32_t>> ModPMatrix::solve(
    const std::vector<std::uint32_t>& b) const {
    ModPMatrix m(rows_, cols_ + 1, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) % p_;
        m.at(r, cols_) = b[r] % p_;
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c <= cols_; ++c)
            std::swap(m.at(rank, c), m.at(pivot, c));
        std::uint32_t inv = inv_mod(m.at(rank, col), p_);
        for (std::size_t c = 0; c <= cols_; ++c)
            m.at(rank, c) = (m.at(rank, c) * inv) % p_;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            std::uint32_t factor = m.at(r, col);
            for (std::size_t c = 0; c <= cols_; ++c) {
                std::uint32_t sub = (factor * m.at(rank, c)) % p_;
                m.at(r, c) = (m.at(r, c) + p_ - sub) % p_;
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows_; ++r)
        if (m.at(r, cols_) != 0) return std::nullopt;
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m.at(r, cols_);
    return x;
}

}  // namespace charp
