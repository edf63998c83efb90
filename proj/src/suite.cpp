#include "fqmzv/suite.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "fqmzv/json_io.hpp"
#include "fqmzv/parallel.hpp"

namespace fqmzv {

using nlohmann::json;

SuiteConfig default_suite_config() {
    SuiteConfig cfg;
    SuiteGrid g2;
    g2.field = json{{"q", 2}};
    g2.places = {{0, 1}, {1, 1, 1}};
    SuiteGrid g3;
    g3.field = json{{"q", 3}};
    g3.places = {{0, 1}, {1, 0, 1}};
    cfg.grids = {g2, g3};
    return cfg;
}

SuiteConfig suite_config_from_json(const json& j) {
    SuiteConfig cfg;
    cfg.seed = j.value("seed", 1ULL);
    cfg.jobs = j.value("jobs", 1);
    for (const auto& jg : j.at("grids")) {
        SuiteGrid g;
        g.field = jg.at("field");
        for (const auto& jp : jg.at("places")) g.places.push_back(jp.get<std::vector<long long>>());
        g.max_depth = jg.value("max_depth", g.max_depth);
        g.max_exponent = jg.value("max_exponent", g.max_exponent);
        g.levels = jg.value("levels", g.levels);
        g.laurent_precision = jg.value("laurent_precision", g.laurent_precision);
        g.laurent_depth = jg.value("laurent_depth", g.laurent_depth);
        g.laurent_max_exponent = jg.value("laurent_max_exponent", g.laurent_max_exponent);
        g.kummer_pairs = jg.value("kummer_pairs", g.kummer_pairs);
        g.kummer_max_level = jg.value("kummer_max_level", g.kummer_max_level);
        g.kummer_exponent_bound = jg.value("kummer_exponent_bound", g.kummer_exponent_bound);
        g.measure_max_level = jg.value("measure_max_level", g.measure_max_level);
        g.e_schedule = jg.value("e_schedule", g.e_schedule);
        g.integral_target_level = jg.value("integral_target_level", g.integral_target_level);
        g.integral_max_exponent = jg.value("integral_max_exponent", g.integral_max_exponent);
        g.work_level = jg.value("work_level", g.work_level);
        cfg.grids.push_back(std::move(g));
    }
    return cfg;
}

json suite_config_to_json(const SuiteConfig& cfg) {
    json grids = json::array();
    for (const SuiteGrid& g : cfg.grids) {
        grids.push_back(json{{"field", g.field},
                             {"places", g.places},
                             {"max_depth", g.max_depth},
                             {"max_exponent", g.max_exponent},
                             {"levels", g.levels},
                             {"laurent_precision", g.laurent_precision},
                             {"laurent_depth", g.laurent_depth},
                             {"laurent_max_exponent", g.laurent_max_exponent},
                             {"kummer_pairs", g.kummer_pairs},
                             {"kummer_max_level", g.kummer_max_level},
                             {"kummer_exponent_bound", g.kummer_exponent_bound},
                             {"measure_max_level", g.measure_max_level},
                             {"e_schedule", g.e_schedule},
                             {"integral_target_level", g.integral_target_level},
                             {"integral_max_exponent", g.integral_max_exponent},
                             {"work_level", g.work_level}});
    }
    return json{{"grids", grids}, {"seed", cfg.seed}, {"jobs", cfg.jobs}};
}

namespace {

// All tuples of the given depth with entries in [0, max].
void for_each_tuple(int depth, long long max_exp,
                    const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> ms(depth, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == depth) { fn(ms); return; }
        for (long long m = 0; m <= max_exp; ++m) {
            ms[j] = m;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Report> run_suite(const SuiteConfig& cfg) {
    std::vector<std::function<Report()>> tasks;
    std::mt19937_64 rng(cfg.seed);

    for (const SuiteGrid& g : cfg.grids) {
        const Fq& f = field_from_json(g.field);
        std::vector<const VPlace*> places;
        for (const auto& coeffs : g.places) places.push_back(&VPlace::get(Poly::from_indices(f, coeffs)));

        for (const VPlace* pp : places) {
            const VPlace& place = *pp;

            // Recursion equivalences, difference identities and round trips
            // over the exponent grid, star and non-star.
            for (int depth = 1; depth <= g.max_depth; ++depth) {
                for_each_tuple(depth, g.max_exponent, [&](const std::vector<long long>& ms) {
                    for (bool star : {false, true}) {
                        tasks.push_back([&place, ms, star] { return recursion_inf_report(place, {ms, star}); });
                        tasks.push_back([&place, ms, star] { return recursion_v_report(place, {ms, star}); });
                        tasks.push_back([&place, ms, star] { return difference_identity_check(place, ms, star); });
                    }
                    tasks.push_back([&place, ms] { return roundtrip_report(place, {ms, false}); });
                });
            }

            // Orthogonality at non-positive arguments, exact, both places.
            for (int depth = 1; depth <= g.max_depth; ++depth) {
                for_each_tuple(depth, g.max_exponent, [&](const std::vector<long long>& ms) {
                    std::vector<long long> args(ms.size());
                    for (size_t i = 0; i < ms.size(); ++i) args[i] = -ms[i];
                    tasks.push_back([&f, args] { return orthogonality_defect_inf(f, args); });
                    tasks.push_back([&place, args] { return orthogonality_defect_v(place, args); });
                });
            }

            // Interpolation at depth 1.
            for (long long m = 1; m <= g.max_exponent; ++m)
                tasks.push_back([&place, m] { return interpolation_check(place, m); });

            // Kummer sweeps: hypothesis-satisfying random pairs, drawn now so
            // the task list is a pure function of the seed.
            for (int e = 1; e <= g.kummer_max_level; ++e) {
                bool fits = false;
                long long order = place.unit_group_order(e, fits);
                if (!fits) continue;
                for (int n = 0; n < g.kummer_pairs; ++n) {
                    int depth = 1 + int(rng() % (unsigned long long)g.max_depth);
                    std::vector<long long> m(depth), l(depth);
                    for (int j = 0; j < depth; ++j) {
                        long long b = g.kummer_exponent_bound;
                        m[j] = (long long)(rng() % (unsigned long long)(2 * b + 1)) - b;
                        long long k = (long long)(rng() % 5) - 2;
                        l[j] = m[j] + k * order;
                    }
                    tasks.push_back([&place, m, l, e] { return kummer_report(place, m, l, e); });
                }
            }

            // Measure additivity over small cylinders, every coordinate.
            for (bool star : {false, true}) {
                for (int e = 1; e <= g.measure_max_level; ++e) {
                    std::vector<Poly> sigmas = {Poly::one(f), Poly::theta(f) + Poly::one(f)};
                    for (const Poly& sigma : sigmas) {
                        if ((sigma % place.v()).is_zero()) continue;
                        for (int r = 1; r <= std::min(2, g.max_depth); ++r) {
                            MeasureSpec spec = MeasureSpec::make(place, std::vector<Poly>(r, sigma),
                                                                 star, g.work_level);
                            Cylinder c = Cylinder::uniform(std::vector<Poly>(r, Poly::one(f)), e);
                            for (int J = 0; J < r; ++J)
                                tasks.push_back([spec, c, J] { return additivity_report(spec, c, J); });
                        }
                    }
                }
            }

            // Integral expressions.
            for (int depth = 1; depth <= std::min(2, g.max_depth); ++depth) {
                for_each_tuple(depth, g.integral_max_exponent, [&](const std::vector<long long>& ms) {
                    long long mmax = 0;
                    for (long long m : ms) mmax = std::max(mmax, m);
                    // Make sure the schedule reaches the exactness threshold d*e >= max m + 2.
                    std::vector<int> sched = g.e_schedule;
                    int need = int((mmax + 2 + place.degree() - 1) / place.degree());
                    if (sched.empty() || sched.back() < need) sched.push_back(need);
                    for (bool star : {false, true})
                        tasks.push_back([&place, ms, star, sched] {
                            return integral_inf_neg_report(place, ms, star, sched);
                        });
                    std::vector<long long> ts(ms.size());
                    for (size_t i = 0; i < ms.size(); ++i) ts[i] = -ms[i];
                    MeasureSpec spec = MeasureSpec::make(place, std::vector<Poly>(ms.size(), Poly::one(f)),
                                                         false, g.work_level);
                    tasks.push_back([spec, ts, &g] {
                        return integral_v_units_report(spec, ts, g.e_schedule, g.integral_target_level);
                    });
                });
            }
        }
    }

    std::vector<Report> out(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        out[i] = tasks[i]();
        auto t1 = std::chrono::steady_clock::now();
        out[i].elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    });
    return out;
}

}  // namespace fqmzv
