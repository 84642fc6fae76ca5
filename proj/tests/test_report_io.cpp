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
#include "invlat/report_io.hpp"
#include "invlat/sweep.hpp"

using namespace testing;

TEST_CASE("JSON round-trips reports")
{
    std::vector<CharSupport> cases{cyc(7, {1, 2, 4}), cyc(2, {1}), cyc(9, {1, -1}), cyc(8, {2}),
                                   prod({3, 3}, {{1, 0}, {0, 1}}), prod({2, 2}, {{1, 0}, {0, 1}, {1, 1}})};
    for (const CharSupport& s : random_cyclic_supports(40, {3, 40}, {1, 4}, 3))
        cases.push_back(s);
    for (const CharSupport& s : cases)
        for (Mode mode : {Mode::both, Mode::rational, Mode::polynomial}) {
            const BoundsReport r = verify_all(s, VerifyOptions{mode, default_point_budget, true});
            const auto j = report_to_json(r);
            CHECK(report_from_json(j) == r);
            CHECK(report_from_json(nlohmann::ordered_json::parse(j.dump())) == r);
            CHECK(report_support(r) == s);
        }
}

TEST_CASE("JSON layout")
{
    const auto j = report_to_json(verify_all(cyc(7, {1, 2, 4})));
    CHECK(j.begin().key() == "schema");
    CHECK(j["schema"] == "invar-lattice/1");
    CHECK(j["beta_r"] == 3);
    CHECK(j["beta_poly"] == 4);
    CHECK(j["group"]["description"] == "Z/7");
    CHECK(j["theoretical"]["family_value"].is_null());
    CHECK(j["extension_indices"][0]["index"] == 1);
    CHECK(j["witnesses"]["rational"]["monomials"][2] == "x1^2/x2");
    CHECK(j["real_field_note"] == true);

    const auto ro = report_to_json(verify_all(cyc(7, {1, 2, 4}), VerifyOptions{Mode::rational}));
    CHECK(ro["beta_poly"].is_null());
    CHECK(ro["witnesses"]["polynomial"].is_null());
}

TEST_CASE("malformed documents are rejected")
{
    auto j = report_to_json(verify_all(cyc(5, {1, 2})));
    j["schema"] = "invar-lattice/0";
    CHECK_THROWS_CODE(report_from_json(j), ErrorCode::invalid_argument);
    j.erase("schema");
    CHECK_THROWS_CODE(report_from_json(j), ErrorCode::invalid_argument);
}

TEST_CASE("table and CSV renderings")
{
    const BoundsReport r = verify_all(cyc(7, {1, 2, 4}));
    const std::string table = report_to_table(r);
    CHECK(table.find("beta_r                3\n") != std::string::npos);
    CHECK(table.find("x1^2/x2 (2,-1,0)") != std::string::npos);
    const std::string csv = report_to_csv(r);
    CHECK(csv.rfind("group,support,m,effective_order,gamma_r,beta_r,gamma_poly,beta_poly", 0) == 0);
    CHECK(csv.find("\nZ/7,\"{1,2,4}\",3,7,3,3,4,4,3 3 3,false\n") != std::string::npos);
}
