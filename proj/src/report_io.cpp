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

#include "invlat/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace invlat {

using json = nlohmann::ordered_json;

namespace {

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<Int> read_optional_int(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<Int>();
}

json index_to_json(const LatticeIndex& idx) { return idx.is_finite() ? json(idx.value()) : json("infinite"); }

LatticeIndex index_from_json(const json& j)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "infinite")
            throw Error(ErrorCode::invalid_argument, "index must be an integer or \"infinite\"");
        return LatticeIndex::infinite();
    }
    return LatticeIndex::finite(j.get<Int>());
}

std::string join(const Vec& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string show(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

} // namespace

CharSupport report_support(const BoundsReport& report)
{
    const AbelianGroup g = make_group(report.group_factors);
    std::vector<Character> chars;
    for (const Vec& c : report.support)
        chars.push_back(Character::reduce(g, c));
    return reduce_support(g, chars);
}

json certificate_to_json(const GeneratorCertificate& cert, const std::vector<std::string>& names)
{
    json monomials = json::array();
    for (const Vec& g : cert.generators)
        monomials.push_back(monomial_string(g, names));
    return {
        {"degree", cert.degree},
        {"geometry", std::string(to_string(cert.geometry))},
        {"generators", cert.generators.points()},
        {"monomials", monomials},
        {"coefficients", cert.coefficients},
        {"target_basis", cert.target_basis},
    };
}

GeneratorCertificate certificate_from_json(const json& j)
{
    GeneratorCertificate cert;
    cert.degree = j.at("degree").get<Int>();
    cert.geometry = parse_geometry(j.at("geometry").get<std::string>());
    cert.target_basis = j.at("target_basis").get<IntMatrix>();
    cert.coefficients = j.at("coefficients").get<IntMatrix>();
    const auto gens = j.at("generators").get<IntMatrix>();
    cert.generators = PointSet(cert.target_basis.empty() ? 0 : cert.target_basis.front().size(), gens);
    return cert;
}

json report_to_json(const BoundsReport& r)
{
    const CharSupport support = report_support(r);
    const auto names = default_variable_names(support);

    json indices = json::array();
    for (const auto& [d, idx] : r.extension_indices)
        indices.push_back({{"degree", d}, {"index", index_to_json(idx)}});

    const TheoreticalChecks& t = r.theoretical;
    json theoretical = {
        {"root_lower_bound", t.root_lower_bound},
        {"hard_floor", t.hard_floor},
        {"involution_only", t.involution_only},
        {"family_value", optional_int(t.family_value)},
        {"minkowski_rhs",
         t.minkowski_rhs ? json{{"num", t.minkowski_rhs->num}, {"den", t.minkowski_rhs->den}} : json(nullptr)},
        {"prime_upper_bound", optional_int(t.prime_upper_bound)},
        {"noether_cap", t.noether_cap},
        {"extremal", t.extremal},
        {"extremal_structure", t.extremal_structure},
        {"minima_product", t.minima_product},
        {"minkowski_limit", t.minkowski_limit},
    };

    return {
        {"schema", std::string(report_schema)},
        {"group", {{"factors", r.group_factors}, {"order", support.group().order()},
                   {"description", support.group().describe()}}},
        {"support", r.support},
        {"m", r.m},
        {"effective_order", r.effective_order},
        {"mode", r.mode},
        {"beta_r", optional_int(r.beta_r)},
        {"gamma_r", optional_int(r.gamma_r)},
        {"beta_poly", optional_int(r.beta_poly)},
        {"gamma_poly", optional_int(r.gamma_poly)},
        {"successive_minima", r.successive_minima},
        {"extension_indices", indices},
        {"theoretical", theoretical},
        {"witnesses",
         {{"rational", r.rational_witness ? certificate_to_json(*r.rational_witness, names) : json(nullptr)},
          {"polynomial",
           r.polynomial_witness ? certificate_to_json(*r.polynomial_witness, names) : json(nullptr)}}},
        {"real_field_note", r.real_field_note},
    };
}

BoundsReport report_from_json(const json& j)
{
    if (!j.contains("schema") || j.at("schema") != report_schema)
        throw Error(ErrorCode::invalid_argument, "not an invar-lattice/1 report");
    BoundsReport r;
    r.group_factors = j.at("group").at("factors").get<std::vector<Int>>();
    r.support = j.at("support").get<IntMatrix>();
    r.m = j.at("m").get<Int>();
    r.effective_order = j.at("effective_order").get<Int>();
    r.mode = j.at("mode").get<std::string>();
    r.beta_r = read_optional_int(j, "beta_r");
    r.gamma_r = read_optional_int(j, "gamma_r");
    r.beta_poly = read_optional_int(j, "beta_poly");
    r.gamma_poly = read_optional_int(j, "gamma_poly");
    r.successive_minima = j.at("successive_minima").get<Vec>();
    for (const json& e : j.at("extension_indices"))
        r.extension_indices.emplace_back(e.at("degree").get<Int>(), index_from_json(e.at("index")));

    const json& t = j.at("theoretical");
    TheoreticalChecks& th = r.theoretical;
    th.root_lower_bound = t.at("root_lower_bound").get<Int>();
    th.hard_floor = t.at("hard_floor").get<Int>();
    th.involution_only = t.at("involution_only").get<bool>();
    th.family_value = read_optional_int(t, "family_value");
    if (!t.at("minkowski_rhs").is_null())
        th.minkowski_rhs = Rational{t.at("minkowski_rhs").at("num").get<Int>(),
                                    t.at("minkowski_rhs").at("den").get<Int>()};
    th.prime_upper_bound = read_optional_int(t, "prime_upper_bound");
    th.noether_cap = t.at("noether_cap").get<Int>();
    th.extremal = t.at("extremal").get<bool>();
    th.extremal_structure = t.at("extremal_structure").get<std::string>();
    th.minima_product = t.at("minima_product").get<Int>();
    th.minkowski_limit = t.at("minkowski_limit").get<Int>();

    const json& w = j.at("witnesses");
    if (!w.at("rational").is_null())
        r.rational_witness = certificate_from_json(w.at("rational"));
    if (!w.at("polynomial").is_null())
        r.polynomial_witness = certificate_from_json(w.at("polynomial"));
    r.real_field_note = j.at("real_field_note").get<bool>();
    return r;
}

std::string report_to_table(const BoundsReport& r)
{
    const CharSupport support = report_support(r);
    const auto names = default_variable_names(support);
    const TheoreticalChecks& t = r.theoretical;

    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& value) {
        os << std::left << std::setw(22) << key << value << '\n';
    };
    row("group", support.group().describe());
    row("support", support.describe());
    row("m", std::to_string(r.m));
    row("effective_order", std::to_string(r.effective_order));
    row("gamma_r", show(r.gamma_r));
    row("beta_r", show(r.beta_r));
    row("gamma_poly", show(r.gamma_poly));
    row("beta_poly", show(r.beta_poly));
    if (!r.successive_minima.empty())
        row("successive_minima", join(r.successive_minima, " "));
    if (!r.extension_indices.empty()) {
        std::string s;
        for (const auto& [d, idx] : r.extension_indices)
            s += (s.empty() ? "" : ", ") + ("d=" + std::to_string(d) + ":" + idx.to_string());
        row("extension_indices", s);
    }
    row("root_lower_bound", std::to_string(t.root_lower_bound));
    row("hard_floor", std::to_string(t.hard_floor));
    row("noether_cap", std::to_string(t.noether_cap));
    if (r.gamma_r) {
        row("extremal", t.extremal ? "true (" + t.extremal_structure + ")" : "false");
        row("minkowski_product", std::to_string(t.minima_product) + " <= " + std::to_string(t.minkowski_limit));
    }
    if (t.family_value)
        row("family_value", std::to_string(*t.family_value));
    if (t.prime_upper_bound)
        row("prime_upper_bound", std::to_string(*t.prime_upper_bound));
    if (t.minkowski_rhs)
        row("minkowski_rhs", t.minkowski_rhs->to_string());
    row("real_field_note", r.real_field_note ? "true" : "false");
    for (const auto* cert : {&r.rational_witness, &r.polynomial_witness}) {
        if (!*cert)
            continue;
        const GeneratorCertificate& c = **cert;
        std::string gens;
        for (const Vec& g : c.generators)
            gens += (gens.empty() ? "" : ", ") + monomial_string(g, names) + " " + format_vector(g);
        row(std::string("witness_") + std::string(to_string(c.geometry)) + "(d=" + std::to_string(c.degree) + ")",
            gens);
    }
    return os.str();
}

std::string report_to_csv(const BoundsReport& r)
{
    const CharSupport support = report_support(r);
    std::ostringstream os;
    os << "group,support,m,effective_order,gamma_r,beta_r,gamma_poly,beta_poly,successive_minima,extremal\n";
    os << support.group().describe() << ',' << '"' << support.describe() << '"' << ',' << r.m << ','
       << r.effective_order << ',' << show(r.gamma_r) << ',' << show(r.beta_r) << ',' << show(r.gamma_poly)
       << ',' << show(r.beta_poly) << ',' << join(r.successive_minima, " ") << ','
       << (r.theoretical.extremal ? "true" : "false") << '\n';
    return os.str();
}

} // namespace invlat
