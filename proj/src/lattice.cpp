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

#include "invlat/lattice.hpp"

namespace invlat {

PointSet::PointSet(std::size_t ambient_dim, const IntMatrix& points) : dim_(ambient_dim)
{
    for (const Vec& p : points)
        add(p);
}

void PointSet::add(Vec point)
{
    if (point.size() != dim_)
        throw Error(ErrorCode::dimension_mismatch,
                    "point " + format_vector(point) + " in a point set of ambient dimension "
                        + std::to_string(dim_));
    degrees_.push_back(l1_norm(point));
    points_.push_back(std::move(point));
}

Lattice Lattice::from_generators(std::size_t ambient_dim, std::span<const Vec> generators)
{
    HermiteBasis hnf(ambient_dim);
    for (const Vec& g : generators)
        hnf.insert(g);
    return Lattice(std::move(hnf));
}

Int LatticeIndex::value() const
{
    if (!value_)
        throw Error(ErrorCode::invalid_argument, "index is infinite");
    return *value_;
}

Lattice representation_lattice(const AbelianGroup& group, std::span<const Character> chars)
{
    const auto& n = group.factor_orders();
    const std::size_t k = n.size();
    const std::size_t m = chars.size();
    if (m == 0)
        throw Error(ErrorCode::trivial_representation, "a representation needs at least one coordinate");
    for (const Character& c : chars)
        if (c.size() != k)
            throw Error(ErrorCode::dimension_mismatch,
                        "character " + c.to_string() + " does not match " + group.describe());

    // Relation system: sum_i chi_i[j] a_i + n_j b_j = 0 for every factor j.
    IntMatrix relations(k, Vec(m + k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < m; ++i)
            relations[j][i] = chars[i][j];
        relations[j][m + j] = n[j];
    }
    const IntMatrix kernel = integer_kernel(relations, m + k);

    // The projection of the kernel to the first m coordinates is the lattice.
    // It contains exponent * e_i, so generators can be reduced modulo the
    // exponent without changing the span.
    const Int e = group.exponent();
    HermiteBasis hnf(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vec unit(m, 0);
        unit[i] = e;
        hnf.insert(unit);
    }
    for (const Vec& v : kernel) {
        Vec a(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
        for (Int& x : a)
            x = floor_mod(x, e);
        hnf.insert(a);
    }
    return Lattice(std::move(hnf));
}

Lattice invariant_lattice(const CharSupport& support)
{
    if (support.empty())
        throw Error(ErrorCode::trivial_representation,
                    "the support is empty: the representation is trivial and has no invariant lattice");
    return representation_lattice(support.group(), support.chars());
}

Lattice span(const PointSet& points)
{
    return Lattice::from_generators(points.ambient_dim(), points.points());
}

bool contains(const Lattice& lattice, std::span<const Int> a) { return lattice.contains(a); }

LatticeIndex index_of(const Lattice& sub, const Lattice& super)
{
    if (sub.ambient_dim() != super.ambient_dim())
        throw Error(ErrorCode::dimension_mismatch, "lattices live in different ambient dimensions");

    // Coordinates of every basis vector of sub with respect to super.
    IntMatrix coeffs;
    coeffs.reserve(sub.rank());
    for (const Vec& b : sub.basis()) {
        auto c = super.coordinates(b);
        if (!c)
            throw ContainmentError("sublattice is not contained in the superlattice: " + format_vector(b)
                                       + " is not in the superlattice",
                                   b);
        coeffs.push_back(std::move(*c));
    }
    if (sub.rank() < super.rank())
        return LatticeIndex::infinite();
    if (sub.rank() == 0)
        return LatticeIndex::finite(1);

    const SmithForm s = smith_normal_form(coeffs, super.rank());
    Int index = 1;
    for (Int d : s.invariants)
        index = checked_mul(index, d);
    return LatticeIndex::finite(index);
}

} // namespace invlat
