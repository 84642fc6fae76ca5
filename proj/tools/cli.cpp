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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "invlat/report_io.hpp"
#include "invlat/sweep.hpp"

namespace invlat::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Int to_int(const std::string& s, const char* what)
{
    Int v = 0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || p != end)
        throw Error(ErrorCode::invalid_argument, std::string("bad ") + what + " '" + s + "'");
    return v;
}

struct RunConfig {
    std::optional<Int> modulus;
    std::string factors;
    std::string chars;
    std::string mode = "both";
    std::string geometry = "cross";
    std::optional<Int> degree;
    std::string format = "table";
    std::uint64_t budget = default_point_budget;
    unsigned workers = 1;
    std::string n_range;
    std::string m_range;
    std::size_t random = 0;
    std::uint64_t seed = 1;
};

AbelianGroup parse_group(const RunConfig& cfg)
{
    if (cfg.modulus && !cfg.factors.empty())
        throw Error(ErrorCode::invalid_argument, "--modulus and --factors are mutually exclusive");
    if (cfg.modulus)
        return make_group({*cfg.modulus});
    if (cfg.factors.empty())
        throw Error(ErrorCode::invalid_argument, "one of --modulus or --factors is required");
    std::vector<Int> f;
    for (const auto& tok : split(cfg.factors, ','))
        f.push_back(to_int(tok, "factor order"));
    return make_group(std::move(f));
}

CharSupport parse_support(const RunConfig& cfg)
{
    const AbelianGroup g = parse_group(cfg);
    if (cfg.chars.empty())
        throw Error(ErrorCode::invalid_argument, "--chars is required");
    std::vector<Character> chars;
    for (const auto& tok : split(cfg.chars, ',')) {
        Vec raw;
        for (const auto& part : split(tok, ':'))
            raw.push_back(to_int(part, "character"));
        chars.push_back(Character::reduce(g, raw));
    }
    CharSupport s = reduce_support(g, chars);
    if (s.empty())
        throw Error(ErrorCode::trivial_representation, "support is empty after removing trivial characters");
    return s;
}

void require_format(const std::string& f)
{
    if (f != "table" && f != "json" && f != "csv")
        throw Error(ErrorCode::invalid_argument, "unknown format '" + f + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const Vec& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out)
{
    const CharSupport s = parse_support(cfg);
    VerifyOptions opts;
    opts.mode = parse_mode(cfg.mode);
    opts.point_budget = cfg.budget;
    const BoundsReport r = verify_all(s, opts);
    if (cfg.format == "json")
        out << dump(report_to_json(r));
    else if (cfg.format == "csv")
        out << report_to_csv(r);
    else
        out << report_to_table(r);
    return ok;
}

int cmd_minima(const RunConfig& cfg, std::ostream& out)
{
    const CharSupport s = parse_support(cfg);
    const Vec minima = successive_minima(s, SearchOptions{cfg.budget});
    if (cfg.format == "json") {
        out << dump({{"schema", std::string(report_schema)}, {"successive_minima", minima}});
    } else if (cfg.format == "csv") {
        for (std::size_t i = 0; i < minima.size(); ++i)
            out << (i ? "," : "") << "lambda_" << i + 1;
        out << '\n' << join(minima, ",") << '\n';
    } else {
        out << join(minima, " ") << '\n';
    }
    return ok;
}

Int require_degree(const RunConfig& cfg)
{
    if (!cfg.degree)
        throw Error(ErrorCode::invalid_argument, "--degree is required");
    if (*cfg.degree < 0)
        throw Error(ErrorCode::invalid_argument, "--degree must be nonnegative");
    return *cfg.degree;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out)
{
    const CharSupport s = parse_support(cfg);
    const Int d = require_degree(cfg);
    const GeneratorCertificate cert = generator_witness(s, d, parse_geometry(cfg.geometry), cfg.budget);
    const auto names = default_variable_names(s);
    if (cfg.format == "json") {
        json j = certificate_to_json(cert, names);
        j["schema"] = std::string(report_schema);
        out << dump(j);
    } else if (cfg.format == "csv") {
        out << "monomial,exponents\n";
        for (const Vec& g : cert.generators)
            out << monomial_string(g, names) << ",\"" << format_vector(g) << "\"\n";
    } else {
        std::size_t width = 0;
        for (const Vec& g : cert.generators)
            width = std::max(width, monomial_string(g, names).size());
        for (const Vec& g : cert.generators) {
            const std::string mono = monomial_string(g, names);
            out << mono << std::string(width - mono.size() + 2, ' ') << format_vector(g) << '\n';
        }
    }
    return ok;
}

int cmd_index(const RunConfig& cfg, std::ostream& out)
{
    const CharSupport s = parse_support(cfg);
    const Int d = require_degree(cfg);
    const Geometry geom = parse_geometry(cfg.geometry);
    const LatticeIndex idx = extension_index(s, d, geom, SearchOptions{cfg.budget});
    if (cfg.format == "json")
        out << dump({{"schema", std::string(report_schema)},
                     {"degree", d},
                     {"geometry", std::string(to_string(geom))},
                     {"index", idx.is_finite() ? json(idx.value()) : json("infinite")}});
    else if (cfg.format == "csv")
        out << "degree,geometry,index\n" << d << ',' << to_string(geom) << ',' << idx.to_string() << '\n';
    else
        out << idx.to_string() << '\n';
    return ok;
}

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n_range.empty() || cfg.m_range.empty())
        throw Error(ErrorCode::invalid_argument, "family needs --n and --m ranges");
    const auto rows = family_sweep(IntRange::parse(cfg.n_range), IntRange::parse(cfg.m_range), cfg.workers,
                                   cfg.budget);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const FamilyRow& r : rows)
            arr.push_back({{"n", r.n},
                           {"m", r.m},
                           {"predicted", r.predicted},
                           {"computed_beta_r", r.beta_r},
                           {"computed_gamma_r", r.gamma_r},
                           {"match", r.match}});
        out << dump({{"schema", std::string(report_schema)}, {"rows", arr}});
    } else if (cfg.format == "csv") {
        out << family_csv(rows);
    } else {
        out << family_table(rows);
    }
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const FamilyRow& r) { return !r.match; });
    if (bad) {
        err << "error[" << to_string(ErrorCode::theory_violation) << "]: " << bad
            << " family cell(s) disagree with the predicted value\n";
        return theory_violation;
    }
    return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<CharSupport> supports;
    if (cfg.modulus || !cfg.factors.empty())
        supports.push_back(parse_support(cfg));
    if (!cfg.n_range.empty() || !cfg.m_range.empty() || cfg.random) {
        if (cfg.n_range.empty() || cfg.m_range.empty())
            throw Error(ErrorCode::invalid_argument, "verify sweeps need both --n and --m");
        const IntRange n = IntRange::parse(cfg.n_range);
        const IntRange m = IntRange::parse(cfg.m_range);
        if (cfg.random) {
            auto rnd = random_cyclic_supports(cfg.random, n, m, cfg.seed);
            supports.insert(supports.end(), rnd.begin(), rnd.end());
        } else {
            for (Int nn = std::max<Int>(n.lo, 2); nn <= n.hi; ++nn)
                for (Int mm = m.lo; mm <= m.hi; ++mm) {
                    auto all = cyclic_supports(nn, mm);
                    supports.insert(supports.end(), all.begin(), all.end());
                }
        }
    }
    if (supports.empty())
        throw Error(ErrorCode::invalid_argument, "verify needs a group and characters, or --n/--m ranges");

    VerifyOptions opts;
    opts.mode = parse_mode(cfg.mode);
    opts.point_budget = cfg.budget;
    opts.witnesses = false;
    const auto outcomes = verify_sweep(supports, opts, cfg.workers);

    std::size_t violations = 0, failures = 0;
    json arr = json::array();
    if (cfg.format == "csv")
        out << "group,support,status,gamma_r,beta_r,gamma_poly,beta_poly\n";
    for (const VerifyOutcome& o : outcomes) {
        const std::string group = o.support.group().describe();
        const std::string sup = o.support.describe();
        std::string status = "ok";
        if (o.error) {
            status = std::string(to_string(*o.error));
            if (*o.error == ErrorCode::theory_violation || *o.error == ErrorCode::internal)
                ++violations;
            else
                ++failures;
            err << "error[" << status << "]: " << o.message << '\n';
        }
        auto field = [&](const std::optional<Int> BoundsReport::*f) -> std::optional<Int> {
            return o.report ? (*o.report).*f : std::nullopt;
        };
        auto show = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string("-"); };
        if (cfg.format == "json") {
            auto js = [](const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); };
            arr.push_back({{"group", group},
                           {"support", sup},
                           {"status", status},
                           {"gamma_r", js(field(&BoundsReport::gamma_r))},
                           {"beta_r", js(field(&BoundsReport::beta_r))},
                           {"gamma_poly", js(field(&BoundsReport::gamma_poly))},
                           {"beta_poly", js(field(&BoundsReport::beta_poly))}});
        } else if (cfg.format == "csv") {
            out << group << ",\"" << sup << "\"," << status << ',' << show(field(&BoundsReport::gamma_r)) << ','
                << show(field(&BoundsReport::beta_r)) << ',' << show(field(&BoundsReport::gamma_poly)) << ','
                << show(field(&BoundsReport::beta_poly)) << '\n';
        } else {
            out << group << ' ' << sup << "  " << status << "  gamma_r=" << show(field(&BoundsReport::gamma_r))
                << " beta_r=" << show(field(&BoundsReport::beta_r))
                << " gamma_poly=" << show(field(&BoundsReport::gamma_poly))
                << " beta_poly=" << show(field(&BoundsReport::beta_poly)) << '\n';
        }
    }
    if (cfg.format == "json")
        out << dump({{"schema", std::string(report_schema)},
                     {"instances", arr},
                     {"violations", violations},
                     {"failures", failures}});
    else if (cfg.format == "table")
        out << outcomes.size() << " instances, " << violations << " violations, " << failures << " failures\n";
    if (violations)
        return theory_violation;
    return failures ? computation_error : ok;
}

} // namespace

int exit_code_for(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::trivial_representation:
        return usage_error;
    case ErrorCode::theory_violation:
    case ErrorCode::internal:
        return theory_violation;
    default:
        return computation_error;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degree bounds for invariant Laurent monomials of diagonal abelian group actions", "invlat"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto add_group = [&cfg](CLI::App* sub) {
        sub->add_option("--modulus", cfg.modulus, "Order n of a cyclic group Z/n");
        sub->add_option("--factors", cfg.factors, "Cyclic factor orders a,b,... of a product group");
        sub->add_option("--chars", cfg.chars, "Characters: integers for Z/n, colon tuples (1:0) for products");
    };
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "table|json|csv");
        sub->add_option("--budget", cfg.budget, "Maximum number of enumerated lattice points");
    };
    auto add_sweep = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n_range, "Range a:b of group orders");
        sub->add_option("--m", cfg.m_range, "Range a:b of support sizes");
        sub->add_option("--workers", cfg.workers, "Worker threads");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "All degree bounds with theoretical checks");
    add_group(bounds);
    add_common(bounds);
    bounds->add_option("--mode", cfg.mode, "rational|polynomial|both");

    CLI::App* minima = app.add_subcommand("minima", "Successive minima of the invariant lattice");
    add_group(minima);
    add_common(minima);

    CLI::App* witness = app.add_subcommand("witness", "Generating monomials of bounded degree");
    add_group(witness);
    add_common(witness);
    witness->add_option("--degree", cfg.degree, "Degree bound d");
    witness->add_option("--geometry", cfg.geometry, "cross|simplex");

    CLI::App* index = app.add_subcommand("index", "Index of the degree-d span in the invariant lattice");
    add_group(index);
    add_common(index);
    index->add_option("--degree", cfg.degree, "Degree bound d");
    index->add_option("--geometry", cfg.geometry, "cross|simplex");

    CLI::App* family = app.add_subcommand("family", "Sweep the sharp family S_m on Z/n");
    add_common(family);
    add_sweep(family);

    CLI::App* verify = app.add_subcommand("verify", "Check every theoretical bound on many instances");
    add_group(verify);
    add_common(verify);
    add_sweep(verify);
    verify->add_option("--mode", cfg.mode, "rational|polynomial|both");
    verify->add_option("--random", cfg.random, "Number of random instances drawn from the --n/--m ranges");
    verify->add_option("--seed", cfg.seed, "Seed for --random");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error[" << to_string(ErrorCode::invalid_argument) << "]: " << e.what() << '\n';
        return usage_error;
    }

    try {
        require_format(cfg.format);
        if (cfg.workers == 0)
            throw Error(ErrorCode::invalid_argument, "--workers must be at least 1");
        if (cfg.budget == 0)
            throw Error(ErrorCode::invalid_argument, "--budget must be positive");
        std::ostringstream buf;
        int rc = ok;
        if (bounds->parsed())
            rc = cmd_bounds(cfg, buf);
        else if (minima->parsed())
            rc = cmd_minima(cfg, buf);
        else if (witness->parsed())
            rc = cmd_witness(cfg, buf);
        else if (index->parsed())
            rc = cmd_index(cfg, buf);
        else if (family->parsed())
            rc = cmd_family(cfg, buf, err);
        else
            rc = cmd_verify(cfg, buf, err);
        out << buf.str();
        return rc;
    } catch (const Error& e) {
        err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error[" << to_string(ErrorCode::internal) << "]: " << e.what() << '\n';
        return theory_violation;
    }
}

} // namespace invlat::cli
