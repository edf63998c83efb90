#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqmzv/json_io.hpp"
#include "fqmzv/parallel.hpp"
#include "fqmzv/suite.hpp"

using namespace fqmzv;
using nlohmann::json;

namespace {

struct FieldOpts {
    int q = 0;
    int p = 0;
    int ext_degree = 1;
    std::vector<int> modulus;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "field size q = p^e (built-in modulus for q in {4,8,9})");
        cmd->add_option("--p", p, "field characteristic (with --ext-degree/--modulus)");
        cmd->add_option("--ext-degree", ext_degree, "extension degree over F_p");
        cmd->add_option("--modulus", modulus, "modulus coefficients over F_p, lowest first")
            ->delimiter(',');
    }

    const Fq& resolve() const {
        if (q > 0) return Fq::get_q(q);
        if (p > 0) return Fq::get(p, ext_degree, modulus);
        throw CLI::ValidationError("--q or --p is required");
    }
};

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

Poly parse_poly(const Fq& f, const std::string& s) {
    return Poly::from_indices(f, parse_ll_list(s));
}

std::vector<Poly> parse_poly_list(const Fq& f, const std::string& s) {
    std::vector<Poly> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_poly(f, item));
    return out;
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_reports(const std::vector<Report>& reports, const std::string& format, bool timings,
                  std::ostream& os) {
    if (format == "csv") {
        os << "identity,params,holds,lhs,rhs,elapsed_ms\n";
        for (const Report& r : reports) {
            os << r.identity << ',' << csv_escape(r.params.dump()) << ',' << (r.holds ? 1 : 0) << ','
               << csv_escape(r.witnesses.value("lhs", json()).dump()) << ','
               << csv_escape(r.witnesses.value("rhs", json()).dump()) << ','
               << (timings ? r.elapsed_ms : 0.0) << '\n';
        }
        return;
    }
    json arr = json::array();
    for (const Report& r : reports) arr.push_back(report_to_json(r, timings));
    os << arr.dump(2) << '\n';
}

int exit_for(const std::vector<Report>& reports) {
    for (const Report& r : reports)
        if (!r.holds) return 1;
    return 0;
}

std::vector<std::vector<long long>> tuple_grid(int depth, long long max_exp) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> ms(depth, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == depth) { out.push_back(ms); return; }
        for (long long m = 0; m <= max_exp; ++m) {
            ms[j] = m;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

struct GridRow {
    std::vector<long long> args;
    json value;
    std::string pretty;
};

void emit_grid(const std::vector<GridRow>& rows, bool star, const std::string& format,
               std::ostream& os) {
    if (format == "csv") {
        os << "args,star,value\n";
        for (const GridRow& row : rows) {
            std::string a;
            for (size_t i = 0; i < row.args.size(); ++i)
                a += (i ? "," : "") + std::to_string(row.args[i]);
            os << csv_escape(a) << ',' << (star ? 1 : 0) << ',' << csv_escape(row.pretty) << '\n';
        }
        return;
    }
    json arr = json::array();
    for (const GridRow& row : rows)
        arr.push_back(json{{"args", row.args}, {"value", row.value}, {"pretty", row.pretty}});
    os << json{{"star", star}, {"grid", arr}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiple zeta (star) values over F_q[t]: infinity-adic and v-adic "
                 "evaluation, Goss measures, and identity verification"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.fallthrough();  // parent flags like --format may follow the subcommand

    // ---- szeta ----------------------------------------------------------
    auto* szeta = app.add_subcommand("szeta", "values of zeta_inf / zeta_inf^star over a tuple");
    FieldOpts szf;
    szf.attach(szeta);
    std::string sz_tuple;
    bool sz_star = false;
    std::string sz_mode = "auto";
    int sz_precision = 0, sz_grid_depth = 0, sz_jobs = 1;
    long long sz_grid_max = 3;
    szeta->add_option("--tuple", sz_tuple, "integer arguments, comma separated (e.g. -1,-2)");
    szeta->add_flag("--star", sz_star, "star variant");
    szeta->add_option("--mode", sz_mode, "neg (exact, arguments <= 0) or pos (Laurent, arguments >= 1)")
        ->check(CLI::IsMember({"auto", "neg", "pos"}));
    szeta->add_option("--precision", sz_precision, "1/t precision for positive arguments");
    szeta->add_option("--grid-depth", sz_grid_depth, "sweep all tuples of this depth instead of --tuple");
    szeta->add_option("--grid-max", sz_grid_max, "largest exponent magnitude in the sweep");
    szeta->add_option("--jobs", sz_jobs, "worker threads for grid sweeps");

    // ---- vzeta ----------------------------------------------------------
    auto* vzeta = app.add_subcommand("vzeta", "values of zeta_v / zeta_v^star over a tuple");
    FieldOpts vzf;
    vzf.attach(vzeta);
    std::string vz_tuple, vz_v;
    bool vz_star = false;
    int vz_level = 0, vz_grid_depth = 0, vz_jobs = 1;
    long long vz_grid_max = 3;
    vzeta->add_option("--v", vz_v, "place: coefficients of v, lowest first (e.g. 0,1 for t)")->required();
    vzeta->add_option("--tuple", vz_tuple, "integer arguments, comma separated");
    vzeta->add_flag("--star", vz_star, "star variant");
    vzeta->add_option("--level", vz_level, "v-adic output level (required for positive arguments)");
    vzeta->add_option("--grid-depth", vz_grid_depth, "sweep all tuples of this depth instead of --tuple");
    vzeta->add_option("--grid-max", vz_grid_max, "largest exponent magnitude in the sweep");
    vzeta->add_option("--jobs", vz_jobs, "worker threads for grid sweeps");

    // ---- measure --------------------------------------------------------
    auto* measure = app.add_subcommand("measure", "closed-form cylinder volume of mu / mu^star");
    FieldOpts mf;
    mf.attach(measure);
    std::string m_v, m_sigma, m_alpha;
    std::string m_levels;
    bool m_star = false;
    int m_work = 2;
    measure->add_option("--v", m_v, "place")->required();
    measure->add_option("--sigma", m_sigma, "sigma_j polynomials, ';' separated")->required();
    measure->add_option("--alpha", m_alpha, "cylinder representatives, ';' separated")->required();
    measure->add_option("--e", m_levels, "cylinder levels e_j (one int, or ',' separated)")->required();
    measure->add_flag("--star", m_star, "star measure");
    measure->add_option("--work-level", m_work, "output precision level");

    // ---- integrate ------------------------------------------------------
    auto* integrate = app.add_subcommand("integrate", "Riemann sums along a level schedule");
    FieldOpts inf_;
    inf_.attach(integrate);
    std::string i_v, i_sigma, i_tuple, i_sched = "1,2,3", i_domain = "units";
    bool i_star = false;
    int i_work = 3;
    integrate->add_option("--v", i_v, "place")->required();
    integrate->add_option("--sigma", i_sigma, "sigma_j polynomials, ';' separated")->required();
    integrate->add_option("--tuple", i_tuple, "integer exponents, comma separated")->required();
    integrate->add_option("--e-schedule", i_sched, "levels, comma separated");
    integrate->add_option("--domain", i_domain, "full or units")
        ->check(CLI::IsMember({"full", "units"}));
    integrate->add_flag("--star", i_star, "star measure");
    integrate->add_option("--work-level", i_work, "working precision level");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run one named identity check");
    FieldOpts vf;
    vf.attach(verify);
    std::string v_name, v_v, v_tuple, v_tuple2, v_sigma = "1";
    bool v_star = false;
    int v_level = 0, v_m = -1, v_e = 1, v_coord = 0, v_precision = 0, v_target = 2;
    std::string v_sched = "1,2,3";
    verify->add_option("name", v_name,
                       "orthogonality|orthogonality-v|interpolation|difference|kummer|additivity|"
                       "integral-inf|integral-v|recursion-inf|recursion-v|roundtrip")
        ->required();
    verify->add_option("--v", v_v, "place (needed by all but orthogonality)");
    verify->add_option("--tuple", v_tuple, "argument or exponent tuple");
    verify->add_option("--tuple2", v_tuple2, "second tuple (kummer)");
    verify->add_option("--m", v_m, "single exponent (interpolation)");
    verify->add_option("--e", v_e, "congruence/cylinder level");
    verify->add_option("--level", v_level, "v-adic level");
    verify->add_option("--precision", v_precision, "Laurent precision");
    verify->add_option("--coordinate", v_coord, "coordinate to refine (additivity)");
    verify->add_option("--sigma", v_sigma, "sigma polynomials, ';' separated");
    verify->add_option("--e-schedule", v_sched, "schedule for integral checks");
    verify->add_option("--target-level", v_target, "target precision (integral-v)");
    verify->add_flag("--star", v_star, "star variant");
    bool v_plain = false;
    verify->add_flag("--plain-convention", v_plain,
                     "diagnostic: unreversed zeta arguments in orthogonality (expected to fail)");

    // ---- suite ----------------------------------------------------------
    auto* suite = app.add_subcommand("suite", "run the full identity suite");
    std::string s_config, s_output;
    unsigned long long s_seed = 1;
    int s_jobs = 1;
    bool s_timings = false;
    suite->add_option("--config", s_config, "JSON config file (same schema as the defaults)");
    suite->add_option("--seed", s_seed, "seed for randomized sweeps");
    suite->add_option("--jobs", s_jobs, "worker threads");
    suite->add_flag("--timings", s_timings, "include real elapsed_ms (not byte-reproducible)");
    suite->add_option("--output", s_output, "write the report there instead of stdout");
    bool s_print_config = false;
    suite->add_flag("--print-config", s_print_config, "print the effective config and exit");

    try {
        app.parse(argc, argv);

        if (*szeta) {
            const Fq& f = szf.resolve();
            if (sz_grid_depth > 0) {
                auto grid = tuple_grid(sz_grid_depth, sz_grid_max);
                std::vector<GridRow> rows(grid.size());
                parallel_for(grid.size(), sz_jobs, [&](size_t i) {
                    Poly z = zeta_inf_neg(f, {grid[i], sz_star});
                    std::vector<long long> args(grid[i].size());
                    for (size_t u = 0; u < grid[i].size(); ++u) args[u] = -grid[i][u];
                    rows[i] = GridRow{args, poly_to_json(z), z.to_string()};
                });
                emit_grid(rows, sz_star, format, std::cout);
                return 0;
            }
            if (sz_tuple.empty()) throw CLI::ValidationError("--tuple or --grid-depth is required");
            auto args = parse_ll_list(sz_tuple);
            bool all_nonpos = true, all_pos = true;
            for (long long a : args) {
                all_nonpos = all_nonpos && a <= 0;
                all_pos = all_pos && a >= 1;
            }
            std::string mode = sz_mode;
            if (mode == "auto") {
                if (all_nonpos) mode = "neg";
                else if (all_pos && sz_precision > 0) mode = "pos";
                else throw CLI::ValidationError(
                    "tuple mode is ambiguous: pass --mode neg|pos (and --precision for pos)");
            }
            json out{{"field", field_to_json(f)}, {"args", args}, {"star", sz_star}};
            if (mode == "neg") {
                if (!all_nonpos) throw CLI::ValidationError("neg mode needs all arguments <= 0");
                std::vector<long long> ms(args.size());
                for (size_t i = 0; i < args.size(); ++i) ms[i] = -args[i];
                Poly z = zeta_inf_neg(f, {ms, sz_star});
                out["value"] = poly_to_json(z);
                out["pretty"] = z.to_string();
            } else {
                if (!all_pos) throw CLI::ValidationError("pos mode needs all arguments >= 1");
                if (sz_precision < 1) throw CLI::ValidationError("pos mode needs --precision");
                Laurent z = zeta_inf_pos(f, {args, sz_star}, sz_precision);
                out["value"] = laurent_to_json(z);
                out["pretty"] = z.to_string();
            }
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*vzeta) {
            const Fq& f = vzf.resolve();
            const VPlace& place = VPlace::get(parse_poly(f, vz_v));
            if (vz_grid_depth > 0) {
                auto grid = tuple_grid(vz_grid_depth, vz_grid_max);
                std::vector<GridRow> rows(grid.size());
                parallel_for(grid.size(), vz_jobs, [&](size_t i) {
                    std::vector<long long> args(grid[i].size());
                    for (size_t u = 0; u < grid[i].size(); ++u) args[u] = -grid[i][u];
                    if (vz_level > 0) {
                        VAdic z = zeta_v_eval(place, {args, vz_star}, vz_level);
                        rows[i] = GridRow{args, vadic_to_json(z), z.to_string()};
                    } else {
                        Poly z = zeta_v_neg(place, {grid[i], vz_star});
                        rows[i] = GridRow{args, poly_to_json(z), z.to_string()};
                    }
                });
                emit_grid(rows, vz_star, format, std::cout);
                return 0;
            }
            if (vz_tuple.empty()) throw CLI::ValidationError("--tuple or --grid-depth is required");
            auto args = parse_ll_list(vz_tuple);
            bool all_nonpos = true;
            for (long long a : args) all_nonpos = all_nonpos && a <= 0;
            json out{{"field", field_to_json(f)}, {"v", poly_to_json(place.v())},
                     {"args", args}, {"star", vz_star}};
            if (vz_level > 0) {
                VAdic z = zeta_v_eval(place, {args, vz_star}, vz_level);
                out["value"] = vadic_to_json(z);
                out["pretty"] = z.to_string();
            } else {
                if (!all_nonpos)
                    throw CLI::ValidationError("positive arguments need --level for a v-adic value");
                std::vector<long long> ms(args.size());
                for (size_t i = 0; i < args.size(); ++i) ms[i] = -args[i];
                Poly z = zeta_v_neg(place, {ms, vz_star});
                out["value"] = poly_to_json(z);
                out["pretty"] = z.to_string();
            }
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*measure) {
            const Fq& f = mf.resolve();
            const VPlace& place = VPlace::get(parse_poly(f, m_v));
            auto sigmas = parse_poly_list(f, m_sigma);
            auto alphas = parse_poly_list(f, m_alpha);
            auto lv = parse_ll_list(m_levels);
            Cylinder c;
            c.base = alphas;
            if (lv.size() == 1) c.levels.assign(alphas.size(), int(lv[0]));
            else for (long long e : lv) c.levels.push_back(int(e));
            MeasureSpec spec = MeasureSpec::make(place, sigmas, m_star, m_work);
            VAdic vol = mu_cylinder(spec, c);
            json out{{"volume", vadic_to_json(vol)}, {"pretty", vol.to_string()}};
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*integrate) {
            const Fq& f = inf_.resolve();
            const VPlace& place = VPlace::get(parse_poly(f, i_v));
            auto sigmas = parse_poly_list(f, i_sigma);
            auto ts = parse_ll_list(i_tuple);
            MeasureSpec spec = MeasureSpec::make(place, sigmas, i_star, i_work);
            Domain dom = i_domain == "full" ? Domain::Full : Domain::Units;
            json vals = json::array();
            for (long long e : parse_ll_list(i_sched)) {
                VAdic r = riemann_integrate(spec, ts, dom, int(e));
                vals.push_back(json{{"e", e}, {"value", vadic_to_json(r)}, {"pretty", r.to_string()}});
            }
            json out{{"values", vals}};
            std::cout << out.dump() << '\n';
            return 0;
        }

        if (*verify) {
            const Fq& f = vf.resolve();
            std::vector<Report> reports;
            auto place_of = [&]() -> const VPlace& {
                if (v_v.empty()) throw CLI::ValidationError("--v is required for this identity");
                return VPlace::get(parse_poly(f, v_v));
            };
            auto tuple_of = [&]() {
                if (v_tuple.empty()) throw CLI::ValidationError("--tuple is required for this identity");
                return parse_ll_list(v_tuple);
            };
            OrthoConvention conv = v_plain ? OrthoConvention::Plain : OrthoConvention::Reversed;
            if (v_name == "orthogonality") {
                std::optional<int> prec;
                if (v_precision > 0) prec = v_precision;
                reports.push_back(orthogonality_defect_inf(f, tuple_of(), prec, conv));
            } else if (v_name == "orthogonality-v") {
                std::optional<int> lvl;
                if (v_level > 0) lvl = v_level;
                reports.push_back(orthogonality_defect_v(place_of(), tuple_of(), lvl, conv));
            } else if (v_name == "interpolation") {
                if (v_m < 0) throw CLI::ValidationError("--m is required");
                reports.push_back(interpolation_check(place_of(), v_m));
            } else if (v_name == "difference") {
                reports.push_back(difference_identity_check(place_of(), tuple_of(), v_star));
            } else if (v_name == "kummer") {
                if (v_tuple2.empty()) throw CLI::ValidationError("--tuple2 is required");
                reports.push_back(kummer_report(place_of(), tuple_of(), parse_ll_list(v_tuple2),
                                                v_e, v_star));
            } else if (v_name == "additivity") {
                const VPlace& place = place_of();
                auto sigmas = parse_poly_list(f, v_sigma);
                auto alphas = parse_poly_list(f, v_tuple.empty() ? "1" : v_tuple);
                MeasureSpec spec = MeasureSpec::make(place, sigmas, v_star,
                                                     std::max(2, v_level > 0 ? v_level : 2));
                reports.push_back(additivity_report(spec, Cylinder::uniform(alphas, v_e), v_coord));
            } else if (v_name == "integral-inf") {
                std::vector<int> sched;
                for (long long e : parse_ll_list(v_sched)) sched.push_back(int(e));
                reports.push_back(integral_inf_neg_report(place_of(), tuple_of(), v_star, sched));
            } else if (v_name == "integral-v") {
                const VPlace& place = place_of();
                auto ts = tuple_of();
                auto sigmas = parse_poly_list(f, v_sigma);
                if (sigmas.size() == 1 && ts.size() > 1) sigmas.assign(ts.size(), sigmas[0]);
                std::vector<int> sched;
                for (long long e : parse_ll_list(v_sched)) sched.push_back(int(e));
                int work = v_level > 0 ? v_level : v_target + 1;
                MeasureSpec spec = MeasureSpec::make(place, sigmas, v_star, work);
                reports.push_back(integral_v_units_report(spec, ts, sched, v_target));
            } else if (v_name == "recursion-inf") {
                reports.push_back(recursion_inf_report(place_of(), {tuple_of(), v_star}));
            } else if (v_name == "recursion-v") {
                reports.push_back(recursion_v_report(place_of(), {tuple_of(), v_star}));
            } else if (v_name == "roundtrip") {
                reports.push_back(roundtrip_report(place_of(), {tuple_of(), v_star}));
            } else {
                throw CLI::ValidationError("unknown identity: " + v_name);
            }
            emit_reports(reports, format, false, std::cout);
            return exit_for(reports);
        }

        if (*suite) {
            SuiteConfig cfg;
            if (!s_config.empty()) {
                std::ifstream in(s_config);
                if (!in) throw CLI::ValidationError("cannot open config file: " + s_config);
                json j;
                in >> j;
                cfg = suite_config_from_json(j);
            } else {
                cfg = default_suite_config();
            }
            if (suite->count("--seed")) cfg.seed = s_seed;
            if (suite->count("--jobs")) cfg.jobs = s_jobs;
            if (s_print_config) {
                std::cout << suite_config_to_json(cfg).dump(2) << '\n';
                return 0;
            }
            std::vector<Report> reports = run_suite(cfg);
            if (!s_output.empty()) {
                std::ofstream out(s_output);
                emit_reports(reports, format, s_timings, out);
            } else {
                emit_reports(reports, format, s_timings, std::cout);
            }
            return exit_for(reports);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
