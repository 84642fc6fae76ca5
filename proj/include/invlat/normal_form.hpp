/*
   Copyright 2026 The invar-lattice Authors

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

#ifndef INVLAT_NORMAL_FORM_HPP
#define INVLAT_NORMAL_FORM_HPP

#include <optional>
#include <span>
#include <vector>

#include "invlat/integer.hpp"

namespace invlat {

// Row-style Hermite normal form of an integer lattice, maintained under
// insertion of generators.
//
// Invariants after every insert():
//   - rows are in echelon form with strictly increasing pivot columns;
//   - every pivot is positive;
//   - for rows j < k, rows[j][pivot(k)] lies in [0, rows[k][pivot(k)]).
// These make the basis unique for a given lattice, so lattice equality is
// equality of HermiteBasis objects.
class HermiteBasis {
public:
    HermiteBasis() = default;
    explicit HermiteBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const IntMatrix& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // Product of the pivots when the lattice has full rank.
    std::optional<Int> determinant() const;

    // Adds v to the generating set; returns whether the lattice grew.
    bool insert(std::span<const Int> v);

    bool contains(std::span<const Int> v) const;

    // Integer coefficients c with v = sum_i c_i rows[i], if v is in the lattice.
    std::optional<Vec> coordinates(std::span<const Int> v) const;

    friend bool operator==(const HermiteBasis&, const HermiteBasis&) = default;

private:
    void check_dim(std::size_t n) const;
    void normalize();

    std::size_t dim_ = 0;
    IntMatrix rows_;
    std::vector<std::size_t> pivots_;
};

// Hermite form of the rows of a (all of length dim) together with a
// unimodular transform T such that T * a = [basis; 0].
struct HermiteTransform {
    IntMatrix basis;
    std::vector<std::size_t> pivots;
    IntMatrix transform;
};

HermiteTransform hermite_with_transform(const IntMatrix& a, std::size_t dim);

// left * a * right = diag(invariants..., 0, ...), with left and right
// unimodular and invariants positive, each dividing the next.
struct SmithForm {
    Vec invariants;
    IntMatrix left;
    IntMatrix right;
    std::size_t rank() const noexcept { return invariants.size(); }
};

// a has a.size() rows of cols entries each. Internally 128-bit; the
// transforms are narrowed back to 64 bits with an overflow check.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

// Generators (as rows) of the integer kernel {x in Z^cols : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols);

} // namespace invlat

#endif
