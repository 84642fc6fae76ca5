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

#ifndef INVLAT_LATTICE_HPP
#define INVLAT_LATTICE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invlat/group_chars.hpp"
#include "invlat/integer.hpp"
#include "invlat/normal_form.hpp"

namespace invlat {

// Exponent vectors with their degrees (L1 norms) cached alongside.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t ambient_dim) : dim_(ambient_dim) {}
    PointSet(std::size_t ambient_dim, const IntMatrix& points);

    void add(Vec point);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const IntMatrix& points() const noexcept { return points_; }
    const Vec& degrees() const noexcept { return degrees_; }
    const Vec& operator[](std::size_t i) const { return points_[i]; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    IntMatrix points_;
    Vec degrees_;
};

// A sublattice of Z^m, stored as its canonical row Hermite basis. Two
// Lattice values compare equal exactly when they describe the same lattice.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(HermiteBasis basis) : hnf_(std::move(basis)) {}

    static Lattice from_generators(std::size_t ambient_dim, std::span<const Vec> generators);

    std::size_t ambient_dim() const noexcept { return hnf_.dim(); }
    std::size_t rank() const noexcept { return hnf_.rank(); }
    bool full_rank() const noexcept { return hnf_.rank() == hnf_.dim(); }
    const IntMatrix& basis() const noexcept { return hnf_.rows(); }
    const HermiteBasis& hermite() const noexcept { return hnf_; }

    // |det(basis)| for full-rank lattices; absent otherwise.
    std::optional<Int> determinant() const { return hnf_.determinant(); }

    bool contains(std::span<const Int> a) const { return hnf_.contains(a); }
    std::optional<Vec> coordinates(std::span<const Int> a) const { return hnf_.coordinates(a); }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    HermiteBasis hnf_;
};

// [super : sub], or infinite when sub has lower rank.
class LatticeIndex {
public:
    static LatticeIndex finite(Int value) { return LatticeIndex(value); }
    static LatticeIndex infinite() { return LatticeIndex(); }

    bool is_infinite() const noexcept { return !value_; }
    bool is_finite() const noexcept { return value_.has_value(); }
    Int value() const;
    std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

    friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;

private:
    LatticeIndex() = default;
    explicit LatticeIndex(Int v) : value_(v) {}
    std::optional<Int> value_;
};

// {a in Z^m : sum a_i chi_i is trivial}, the exponents of invariant Laurent
// monomials. Computed from the integer kernel of [chi-matrix | diag(n_j)].
Lattice invariant_lattice(const CharSupport& support);

// The same lattice for an unreduced representation given by its characters
// in coordinate order (duplicates and trivial characters allowed), i.e. the
// exponents of invariant Laurent monomials in all N variables.
Lattice representation_lattice(const AbelianGroup& group, std::span<const Character> chars);

// Integer span of a point set, in canonical form. Rank 0 for the empty set.
Lattice span(const PointSet& points);

// Throws ContainmentError (with a witness) unless sub is a sublattice of super.
LatticeIndex index_of(const Lattice& sub, const Lattice& super);

bool contains(const Lattice& lattice, std::span<const Int> a);

} // namespace invlat

#endif
