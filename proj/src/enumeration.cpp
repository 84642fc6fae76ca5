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

#include "invlat/enumeration.hpp"

namespace invlat {

std::string_view to_string(Geometry g) noexcept
{
    return g == Geometry::cross_polytope ? "cross" : "simplex";
}

Geometry parse_geometry(std::string_view s)
{
    if (s == "cross" || s == "cross_polytope" || s == "cross-polytope")
        return Geometry::cross_polytope;
    if (s == "simplex")
        return Geometry::simplex;
    throw Error(ErrorCode::invalid_argument, "unknown geometry '" + std::string(s) + "'");
}

struct ShellEnumerator::Cursor {
    Vec point;
    std::vector<Vec> acc; // acc[i]: residues of the prefix a_0..a_{i-1}
    Shell* out;
};

ShellEnumerator::ShellEnumerator(const Lattice& lattice, Geometry geometry, std::uint64_t point_budget)
    : dim_(lattice.ambient_dim()), geometry_(geometry), budget_(point_budget)
{
    if (!lattice.full_rank())
        throw Error(ErrorCode::invalid_argument, "shell enumeration needs a full-rank lattice");

    // U B V = D  =>  a in L  iff  (a V)_t == 0 mod D_t for every t.
    const SmithForm s = smith_normal_form(lattice.basis(), dim_);
    std::vector<std::size_t> cols;
    for (std::size_t t = 0; t < s.invariants.size(); ++t)
        if (s.invariants[t] > 1) {
            moduli_.push_back(s.invariants[t]);
            cols.push_back(t);
        }
    residues_.assign(dim_, Vec(moduli_.size(), 0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t t = 0; t < cols.size(); ++t)
            residues_[i][t] = floor_mod(s.right[i][cols[t]], moduli_[t]);
}

void ShellEnumerator::emit(Cursor& cur)
{
    if (++emitted_ > budget_)
        throw Error(ErrorCode::budget_exceeded,
                    "enumeration budget of " + std::to_string(budget_) + " points exceeded");
    cur.out->points.add(cur.point);
}

void ShellEnumerator::descend(Cursor& cur, std::size_t coord, Int remaining)
{
    const Vec& acc = cur.acc[coord];
    const Vec& res = residues_[coord];
    const std::size_t k = moduli_.size();

    auto lands_on_zero = [&](Int value) {
        for (std::size_t t = 0; t < k; ++t) {
            const Int r = (acc[t] + floor_mod(value, moduli_[t]) * res[t]) % moduli_[t];
            if (r != 0)
                return false;
        }
        return true;
    };

    if (coord + 1 == dim_) {
        // The last coordinate is pinned to +-remaining; test the residue directly.
        if (geometry_ == Geometry::cross_polytope && remaining > 0 && lands_on_zero(-remaining)) {
            cur.point[coord] = -remaining;
            emit(cur);
        }
        if (lands_on_zero(remaining)) {
            cur.point[coord] = remaining;
            emit(cur);
        }
        return;
    }

    const Int lo = geometry_ == Geometry::cross_polytope ? -remaining : 0;
    Vec& next = cur.acc[coord + 1];
    for (std::size_t t = 0; t < k; ++t)
        next[t] = (acc[t] + floor_mod(lo, moduli_[t]) * res[t]) % moduli_[t];
    for (Int v = lo; v <= remaining; ++v) {
        cur.point[coord] = v;
        descend(cur, coord + 1, remaining - (v < 0 ? -v : v));
        for (std::size_t t = 0; t < k; ++t) {
            next[t] += res[t];
            if (next[t] >= moduli_[t])
                next[t] -= moduli_[t];
        }
    }
    cur.point[coord] = 0;
}

Shell ShellEnumerator::shell(Int degree)
{
    if (degree < 0)
        throw Error(ErrorCode::invalid_argument, "shell degree must be non-negative");
    Shell out{degree, PointSet(dim_)};
    if (dim_ == 0) {
        if (degree == 0) {
            Cursor cur{Vec{}, {}, &out};
            emit(cur);
        }
        return out;
    }
    // Moduli are at most the lattice determinant; keep products in range.
    for (Int mod : moduli_)
        if (mod > (Int{1} << 31))
            throw Error(ErrorCode::overflow, "lattice determinant too large for shell enumeration");
    Cursor cur{Vec(dim_, 0), std::vector<Vec>(dim_, Vec(moduli_.size(), 0)), &out};
    descend(cur, 0, degree);
    return out;
}

Shell shell_points(const Lattice& lattice, Int degree, Geometry geometry, std::uint64_t point_budget)
{
    ShellEnumerator e(lattice, geometry, point_budget);
    return e.shell(degree);
}

PointSet ball_points(const Lattice& lattice, Int degree, Geometry geometry, std::uint64_t point_budget)
{
    if (degree < 0)
        throw Error(ErrorCode::invalid_argument, "ball degree must be non-negative");
    ShellEnumerator e(lattice, geometry, point_budget);
    PointSet all(lattice.ambient_dim());
    for (Int d = 0; d <= degree; ++d)
        for (const Vec& p : e.shell(d).points)
            all.add(p);
    return all;
}

} // namespace invlat
