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

#include "helpers.hpp"
#include "invlat/sweep.hpp"

using namespace testing;

namespace {

void check_against_oracle(const CharSupport& s)
{
    const oracle::Rep rep = to_rep(s);
    for (Geometry g : {Geometry::cross_polytope, Geometry::simplex}) {
        const bool simplex = g == Geometry::simplex;
        const DegreeProfile p = degree_profile(s, g);
        const oracle::Profile o = oracle::profile(rep, simplex);
        INFO(s.group().describe(), " ", s.describe(), " ", to_string(g));
        CHECK(p.gamma == o.gamma);
        CHECK(p.beta == o.beta);
        if (!simplex)
            CHECK(p.minima == Vec(o.minima.begin(), o.minima.end()));
        for (Int d = 0; d <= o.beta; ++d) {
            const LatticeIndex got = extension_index(s, d, g);
            const auto& want = o.index_at[static_cast<std::size_t>(d)];
            if (want)
                CHECK(got == LatticeIndex::finite(*want));
            else
                CHECK(got.is_infinite());
        }
    }
}

} // namespace

TEST_CASE("Z/7 with characters 1,2,4")
{
    const CharSupport s = cyc(7, {1, 2, 4});
    CHECK(gamma_rational(s) == 3);
    CHECK(beta_rational(s) == 3);
    CHECK(gamma_poly(s) == 4);
    CHECK(beta_poly(s) == 4);
    CHECK(successive_minima(s) == Vec{3, 3, 3});
    CHECK(extension_index(s, 3, Geometry::simplex).is_infinite());
    CHECK(extension_index(s, 4, Geometry::simplex) == LatticeIndex::finite(1));
    CHECK(extension_index(s, 3, Geometry::cross_polytope) == LatticeIndex::finite(1));
    CHECK(extension_index(s, 2, Geometry::cross_polytope).is_infinite());
}

TEST_CASE("small examples")
{
    const CharSupport z2 = cyc(2, {1});
    CHECK(gamma_rational(z2) == 2);
    CHECK(beta_rational(z2) == 2);
    CHECK(gamma_poly(z2) == 2);
    CHECK(beta_poly(z2) == 2);
    CHECK(successive_minima(z2) == Vec{2});

    const CharSupport z4 = cyc(4, {1, 2});
    CHECK(gamma_rational(z4) == 3);
    CHECK(beta_rational(z4) == 3);
    CHECK(successive_minima(z4) == Vec{2, 3});

    const CharSupport z3 = cyc(3, {1, 2});
    CHECK(gamma_poly(z3) == 3);
    CHECK(beta_poly(z3) == 3);

    CHECK(beta_rational(cyc(9, {1, -1})) == 9);

    const CharSupport z11 = cyc(11, {1, 2, 3});
    CHECK(gamma_rational(z11) == 4);
    CHECK(beta_rational(z11) == 4);
    CHECK(successive_minima(z11) == Vec{3, 3, 4});
}

TEST_CASE("root_lower_bound")
{
    CHECK(root_lower_bound(7, 3) == 2);
    CHECK(root_lower_bound(9, 2) == 3);
    CHECK(root_lower_bound(7, 1) == 7);
    CHECK(root_lower_bound(1, 4) == 1);
    CHECK(root_lower_bound(1000000, 6) == 10);
    CHECK(root_lower_bound(1000001, 6) == 11);
    CHECK_THROWS_CODE(root_lower_bound(7, 0), ErrorCode::invalid_argument);
    for (Int n = 1; n <= 300; ++n)
        for (Int m = 1; m <= 6; ++m) {
            const Int r = root_lower_bound(n, m);
            Int lo = 1, hi = 1;
            for (Int i = 0; i < m; ++i) {
                lo *= r - 1;
                hi *= r;
            }
            CHECK(hi >= n);
            CHECK(lo < n);
        }
}

TEST_CASE("check_extremal")
{
    const ExtremalCheck e = check_extremal(prod({3, 3}, {{1, 0}, {0, 1}}), 3);
    CHECK(e.extremal);
    CHECK_FALSE(e.structure.empty());
    CHECK_FALSE(check_extremal(cyc(7, {1, 2, 4}), 3).extremal);
    CHECK(check_extremal(cyc(2, {1}), 2).extremal);
    CHECK(gamma_rational(prod({3, 3}, {{1, 0}, {0, 1}})) == 3);
}

TEST_CASE("hard_floor")
{
    CHECK(hard_floor(cyc(2, {1})) == 2);
    CHECK(hard_floor(prod({2, 2}, {{1, 0}, {0, 1}})) == 2);
    CHECK(hard_floor(prod({2, 2}, {{1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(hard_floor(cyc(7, {1, 2, 4})) == 3);
    CHECK(hard_floor(cyc(4, {2})) == 2);
    CHECK(hard_floor(cyc(4, {1, 2})) == 3);
}

TEST_CASE("family support and value")
{
    CHECK(family_support(7, 4).describe() == "{1,6,2,5}");
    CHECK(family_value(7, 4) == 4);
    CHECK(family_support(7, 3).describe() == "{1,6,2}");
    CHECK(family_value(7, 3) == 4);
    CHECK(family_support(12, 6).describe() == "{1,11,2,10,3,9}");
    CHECK(family_value(12, 6) == 4);
    CHECK(family_value(9, 2) == 9);
    CHECK(family_value(3, 1) == 3);
    CHECK_THROWS_CODE(family_support(5, 5), ErrorCode::invalid_argument);
    CHECK_THROWS_CODE(family_value(2, 1), ErrorCode::invalid_argument);
}

TEST_CASE("minkowski_rhs")
{
    CHECK(minkowski_rhs(1, 7) == Rational::make(7, 1));
    CHECK(minkowski_rhs(2, 7) == Rational::make(7, 1));
    CHECK(minkowski_rhs(3, 7) == Rational::make(7, 1));
    CHECK(minkowski_rhs(4, 5) == Rational::make(10, 1));
    for (Int p : {2, 3, 5, 7, 11, 13, 31})
        for (Int m : {1, 2})
            CHECK(minkowski_rhs(m, p) == Rational::make(p, 1));
    CHECK_THROWS_CODE(minkowski_rhs(2, 9), ErrorCode::invalid_argument);
    CHECK(Rational::make(6, 4).to_string() == "3/2");
    CHECK(Rational::make(-6, -3).to_string() == "2");
    CHECK(at_most(3, Rational::make(7, 2)));
    CHECK_FALSE(at_most(4, Rational::make(7, 2)));
}

TEST_CASE("verify_all on the examples")
{
    const BoundsReport r = verify_all(cyc(7, {1, 2, 4}));
    CHECK(r.beta_r == 3);
    CHECK(r.gamma_r == 3);
    CHECK(r.beta_poly == 4);
    CHECK(r.gamma_poly == 4);
    CHECK(r.successive_minima == Vec{3, 3, 3});
    CHECK(r.effective_order == 7);
    CHECK(r.theoretical.noether_cap == 7);
    CHECK(r.theoretical.hard_floor == 3);
    CHECK(r.theoretical.root_lower_bound == 2);
    CHECK_FALSE(r.theoretical.extremal);
    CHECK(r.theoretical.prime_upper_bound == 5);
    CHECK(r.real_field_note);
    REQUIRE(r.rational_witness);
    REQUIRE(r.polynomial_witness);
    CHECK(r.extension_indices.size() == 1);

    const BoundsReport p11 = verify_all(cyc(11, {1, 2, 3}));
    CHECK(*p11.gamma_r >= 3);
    CHECK(*p11.beta_r <= 7);
    CHECK(p11.theoretical.prime_upper_bound == 7);

    CHECK_THROWS_CODE(verify_all(cyc(7, {0})), ErrorCode::trivial_representation);

    VerifyOptions rational_only;
    rational_only.mode = Mode::rational;
    const BoundsReport ro = verify_all(cyc(7, {1, 2, 4}), rational_only);
    CHECK(ro.beta_r == 3);
    CHECK_FALSE(ro.beta_poly);
    CHECK_FALSE(ro.polynomial_witness);

    VerifyOptions poly_only;
    poly_only.mode = Mode::polynomial;
    const BoundsReport po = verify_all(cyc(7, {1, 2, 4}), poly_only);
    CHECK(po.beta_poly == 4);
    CHECK_FALSE(po.beta_r);
}

TEST_CASE("mode parsing")
{
    CHECK(parse_mode("rational") == Mode::rational);
    CHECK(parse_mode("polynomial") == Mode::polynomial);
    CHECK(parse_mode("both") == Mode::both);
    CHECK_THROWS_CODE(parse_mode("real"), ErrorCode::invalid_argument);
}

TEST_CASE("profiles match the naive oracle for n <= 12, m <= 3")
{
    for (Int n = 2; n <= 12; ++n)
        for (Int m = 1; m <= 3; ++m)
            for (const CharSupport& s : cyclic_supports(n, m))
                check_against_oracle(s);
    check_against_oracle(prod({2, 2}, {{1, 0}, {0, 1}, {1, 1}}));
    check_against_oracle(prod({3, 3}, {{1, 0}, {0, 1}}));
    check_against_oracle(prod({2, 4}, {{1, 1}, {0, 2}, {1, 3}}));
}

TEST_CASE("chain, floor, minima and index properties on every support with n <= 14, m <= 4")
{
    for (Int n = 2; n <= 14; ++n)
        for (Int m = 1; m <= 4; ++m)
            for (const CharSupport& s : cyclic_supports(n, m)) {
                INFO(s.group().describe(), " ", s.describe());
                const BoundsReport r = verify_all(s);
                CHECK(*r.gamma_r <= *r.beta_r);
                CHECK(*r.beta_r <= *r.beta_poly);
                CHECK(*r.gamma_r <= *r.gamma_poly);
                CHECK(*r.gamma_poly <= *r.beta_poly);
                CHECK(checked_pow(*r.gamma_r, m) >= r.effective_order);
                CHECK(*r.gamma_r >= hard_floor(s));
                bool all_involutions = true;
                for (const Character& c : s.chars())
                    all_involutions = all_involutions && is_involution(c, s.group());
                CHECK((*r.gamma_r == 2) == all_involutions);

                const Vec& lam = r.successive_minima;
                CHECK(std::is_sorted(lam.begin(), lam.end()));
                CHECK(lam.back() == *r.gamma_r);
                CHECK(lam.front() >= 2);
                if (r.effective_order % 2 == 1)
                    for (std::size_t i = static_cast<std::size_t>(m / 2); i < lam.size(); ++i)
                        CHECK(lam[i] >= 3);
                Int prod_lam = 1, fact = 1;
                for (std::size_t i = 0; i < lam.size(); ++i) {
                    prod_lam *= lam[i];
                    fact *= static_cast<Int>(i + 1);
                }
                CHECK(prod_lam <= fact * r.effective_order);

                for (Geometry g : {Geometry::cross_polytope, Geometry::simplex}) {
                    const DegreeProfile p = degree_profile(s, g);
                    Int prev = 0;
                    for (Int d = p.gamma; d <= p.beta + 1; ++d) {
                        const LatticeIndex idx = extension_index(s, d, g);
                        REQUIRE(idx.is_finite());
                        if (prev)
                            CHECK(idx.value() <= prev);
                        CHECK((idx.value() == 1) == (d >= p.beta));
                        prev = idx.value();
                    }
                    if (p.gamma > 1)
                        CHECK(extension_index(s, p.gamma - 1, g).is_infinite());
                }
            }
}

TEST_CASE("chain on supports with m <= 2 for every n <= 60 and random m <= 5")
{
    for (Int n = 2; n <= 60; ++n)
        for (Int m = 1; m <= 2; ++m)
            for (const CharSupport& s : cyclic_supports(n, m)) {
                const BoundsReport r = verify_all(s, VerifyOptions{Mode::both, default_point_budget, false});
                CHECK(*r.gamma_r <= std::min(*r.gamma_poly, *r.beta_r));
                CHECK(std::max(*r.gamma_poly, *r.beta_r) <= *r.beta_poly);
            }
    for (const CharSupport& s : random_cyclic_supports(300, {15, 60}, {3, 5}, 7)) {
        const BoundsReport r = verify_all(s, VerifyOptions{Mode::both, default_point_budget, false});
        CHECK(*r.gamma_r <= std::min(*r.gamma_poly, *r.beta_r));
        CHECK(std::max(*r.gamma_poly, *r.beta_r) <= *r.beta_poly);
    }
}

TEST_CASE("non-faithful supports use the effective group")
{
    // <2> in Z/8 has order 4; the lattice is that of Z/4 with character 1.
    const BoundsReport r = verify_all(cyc(8, {2}));
    CHECK(r.effective_order == 4);
    CHECK(r.beta_r == 4);
    CHECK(r.theoretical.noether_cap == 4);
}

TEST_CASE("search budget is enforced")
{
    CHECK_THROWS_CODE(beta_rational(cyc(97, {1, 2, 3, 5, 7}), SearchOptions{50}), ErrorCode::budget_exceeded);
}
