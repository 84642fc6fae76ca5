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

#ifndef INVLAT_ENUMERATION_HPP
#define INVLAT_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "invlat/lattice.hpp"

namespace invlat {

// cross_polytope: {a : sum |a_i| <= d}        (Laurent monomials of degree <= d)
// simplex:        {a : a_i >= 0, sum a_i <= d} (true monomials of degree <= d)
enum class Geometry { cross_polytope, simplex };

std::string_view to_string(Geometry g) noexcept;

// Accepts "cross", "cross_polytope", "simplex".
Geometry parse_geometry(std::string_view s);

inline constexpr std::uint64_t default_point_budget = 10'000'000;

// Lattice points of degree exactly `degree`, in lexicographic order.
struct Shell {
    Int degree = 0;
    PointSet points;
};

// Enumerates shells of a full-rank lattice. The lattice is turned into a
// congruence system once (Smith form of its basis), so membership of a point
// costs one residue update per coordinate. Every emitted point counts
// against the budget; exceeding it raises ErrorCode::budget_exceeded.
class ShellEnumerator {
public:
    ShellEnumerator(const Lattice& lattice, Geometry geometry,
                    std::uint64_t point_budget = default_point_budget);

    Shell shell(Int degree);

    std::size_t ambient_dim() const noexcept { return dim_; }
    Geometry geometry() const noexcept { return geometry_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

private:
    struct Cursor;
    void descend(Cursor& cur, std::size_t coord, Int remaining);
    void emit(Cursor& cur);

    std::size_t dim_;
    Geometry geometry_;
    std::uint64_t budget_;
    std::uint64_t emitted_ = 0;
    Vec moduli_;                 // nontrivial invariant factors of Z^m / L
    std::vector<Vec> residues_;  // residues_[i][t]: image of e_i modulo moduli_[t]
};

Shell shell_points(const Lattice& lattice, Int degree, Geometry geometry,
                   std::uint64_t point_budget = default_point_budget);

// Union of the shells 0..degree, ordered by degree and then lexicographically.
PointSet ball_points(const Lattice& lattice, Int degree, Geometry geometry,
                     std::uint64_t point_budget = default_point_budget);

} // namespace invlat

#endif
