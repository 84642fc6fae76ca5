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

#include <algorithm>

#include "helpers.hpp"

using namespace testing;

namespace {

std::vector<CharSupport> small_supports()
{
    std::vector<CharSupport> out{cyc(7, {1, 2, 4}), cyc(4, {1, 2}), cyc(2, {1}), cyc(6, {2, 3}),
                                 cyc(12, {3, 4, 6}), cyc(9, {1, 8}), prod({3, 3}, {{1, 0}, {0, 1}}),
                                 prod({2, 2}, {{1, 0}, {0, 1}, {1, 1}}), prod({2, 4}, {{1, 1}, {0, 2}, {1, 3}, {0, 1}})};
    for (int trial = 0; trial < 20; ++trial) {
        const Int n = uniform(2, 30);
        Vec ks(static_cast<std::size_t>(uniform(1, 4)));
        for (Int& k : ks)
            k = uniform(1, n - 1);
        out.push_back(reduce_support(make_group({n}), std::span<const Int>(ks)));
    }
    return out;
}

} // namespace

TEST_CASE("invariant lattice examples")
{
    const Lattice l = invariant_lattice(cyc(7, {1, 2, 4}));
    CHECK(l.full_rank());
    CHECK(*l.determinant() == 7);
    for (const Vec& v : {Vec{1, 1, 1}, Vec{1, 3, 0}, Vec{0, 1, 3}, Vec{2, -1, 0}})
        CHECK(contains(l, v));
    CHECK_FALSE(contains(l, Vec{1, 0, 0}));
    CHECK(contains(l, Vec{0, 0, 0}));

    const Lattice two = invariant_lattice(cyc(2, {1}));
    CHECK(two.basis() == IntMatrix{{2}});
    CHECK(*two.determinant() == 2);

    const Lattice four = invariant_lattice(cyc(4, {1, 2}));
    CHECK(*four.determinant() == 4);
    CHECK(contains(four, Vec{0, 2}));
    CHECK(contains(four, Vec{2, 1}));

    CHECK_THROWS_CODE(invariant_lattice(cyc(5, {0})), ErrorCode::trivial_representation);
}

TEST_CASE("span examples")
{
    CHECK(*span(PointSet(3, {{1, 1, 1}, {2, -1, 0}, {0, 2, -1}})).determinant() == 7);
    const Lattice one = span(PointSet(3, {{1, 1, 1}}));
    CHECK(one.rank() == 1);
    CHECK_FALSE(one.determinant());
    CHECK(span(PointSet(3)).rank() == 0);
    CHECK_THROWS_CODE(PointSet(3, {{1, 1}}), ErrorCode::dimension_mismatch);
}

TEST_CASE("index_of examples")
{
    const Lattice l = invariant_lattice(cyc(7, {1, 2, 4}));
    CHECK(index_of(span(PointSet(3, {{1, 1, 1}})), l).is_infinite());
    CHECK(index_of(span(PointSet(3, {{1, 1, 1}, {1, 3, 0}, {0, 1, 3}})), l) == LatticeIndex::finite(1));
    CHECK(index_of(span(PointSet(3, {{2, 2, 2}, {1, 3, 0}, {0, 1, 3}})), l) == LatticeIndex::finite(2));
    CHECK(index_of(l, l).value() == 1);
}

TEST_CASE("index_of reports the offending vector when sub is not contained")
{
    const Lattice l = invariant_lattice(cyc(7, {1, 2, 4}));
    const Lattice bad = span(PointSet(3, {{1, 1, 1}, {1, 0, 0}}));
    try {
        (void)index_of(bad, l);
        FAIL("expected a containment error");
    } catch (const ContainmentError& e) {
        CHECK(e.code() == ErrorCode::containment_violation);
        CHECK_FALSE(l.contains(e.witness()));
        CHECK(bad.contains(e.witness()));
    }
    CHECK_THROWS_CODE(index_of(span(PointSet(2)), l), ErrorCode::dimension_mismatch);
}

TEST_CASE("det L equals the subgroup-closure order for |G| <= 200")
{
    for (Int n = 2; n <= 200; n += 3) {
        Vec ks(static_cast<std::size_t>(uniform(1, 4)));
        for (Int& k : ks)
            k = uniform(1, n - 1);
        const CharSupport s = reduce_support(make_group({n}), std::span<const Int>(ks));
        CHECK(*invariant_lattice(s).determinant() == oracle::closure_order(to_rep(s)));
    }
    for (const CharSupport& s : small_supports())
        CHECK(*invariant_lattice(s).determinant() == oracle::closure_order(to_rep(s)));
}

TEST_CASE("membership matches the weight, exhaustively on |a_i| <= 3")
{
    for (const CharSupport& s : small_supports()) {
        const Lattice l = invariant_lattice(s);
        const oracle::Rep rep = to_rep(s);
        oracle::box(s.size(), -3, 3, [&](const oracle::V& x) {
            const Vec a(x.begin(), x.end());
            const bool trivial = weight(s, a).is_trivial();
            CHECK(trivial == oracle::invariant(rep, x));
            CHECK(contains(l, a) == trivial);
        });
    }
}

TEST_CASE("span is canonical under permutation, negation and redundant generators")
{
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = static_cast<std::size_t>(uniform(1, 4));
        IntMatrix pts(static_cast<std::size_t>(uniform(1, 5)));
        for (Vec& p : pts)
            p = random_vec(dim, 6);
        const Lattice base = span(PointSet(dim, pts));

        IntMatrix shuffled = pts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng());
        for (Vec& p : shuffled)
            if (uniform(0, 1))
                for (Int& x : p)
                    x = -x;
        Vec combo(dim, 0);
        for (const Vec& p : pts) {
            const Int c = uniform(-3, 3);
            for (std::size_t j = 0; j < dim; ++j)
                combo[j] += c * p[j];
        }
        shuffled.push_back(combo);
        CHECK(span(PointSet(dim, shuffled)) == base);
    }
}

TEST_CASE("index times det L equals det of the sublattice")
{
    for (const CharSupport& s : small_supports()) {
        const Lattice l = invariant_lattice(s);
        for (int trial = 0; trial < 10; ++trial) {
            PointSet pts(s.size());
            for (std::size_t i = 0; i < s.size() + 1; ++i) {
                Vec v(s.size(), 0);
                for (const Vec& b : l.basis()) {
                    const Int c = uniform(-3, 3);
                    for (std::size_t j = 0; j < v.size(); ++j)
                        v[j] += c * b[j];
                }
                pts.add(v);
            }
            const Lattice sub = span(pts);
            const LatticeIndex idx = index_of(sub, l);
            if (sub.full_rank())
                CHECK(idx.value() * *l.determinant() == *sub.determinant());
            else
                CHECK(idx.is_infinite());
        }
    }
}

TEST_CASE("representation lattice keeps duplicated and trivial coordinates")
{
    const AbelianGroup g = make_group({2});
    const std::vector<Character> chars(3, Character::reduce(g, Vec{1}));
    const Lattice l = representation_lattice(g, chars);
    CHECK(*l.determinant() == 2);
    CHECK(l.contains(Vec{1, 0, -1}));
    CHECK(l.contains(Vec{1, 1, 0}));
    CHECK_FALSE(l.contains(Vec{1, 0, 0}));

    const AbelianGroup z5 = make_group({5});
    const std::vector<Character> with_trivial{Character::reduce(z5, Vec{0}), Character::reduce(z5, Vec{2})};
    const Lattice t = representation_lattice(z5, with_trivial);
    CHECK(t.contains(Vec{1, 0}));
    CHECK(t.contains(Vec{0, 5}));
    CHECK(*t.determinant() == 5);
}
