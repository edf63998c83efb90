#include "fqmzv/identities.hpp"

#include <stdexcept>

#include "fqmzv/binomial.hpp"
#include "fqmzv/json_io.hpp"

namespace fqmzv {

using nlohmann::json;

json report_to_json(const Report& r, bool with_timings) {
    return json{{"identity", r.identity},
                {"params", r.params},
                {"holds", r.holds},
                {"witnesses", r.witnesses},
                {"elapsed_ms", with_timings ? r.elapsed_ms : 0.0}};
}

namespace {

// zeta factor argument lists for the alternating convolution: for summand l,
// the non-star factor takes the last l arguments (reversed under the stated
// convention) and the star factor the first r - l in order.
std::vector<long long> zeta_args(const std::vector<long long>& args, int l, OrthoConvention conv) {
    const int r = int(args.size());
    std::vector<long long> out;
    out.reserve(l);
    if (conv == OrthoConvention::Reversed) {
        for (int j = r - 1; j >= r - l; --j) out.push_back(args[j]);
    } else {
        for (int j = r - l; j < r; ++j) out.push_back(args[j]);
    }
    return out;
}

std::vector<long long> negated(const std::vector<long long>& args) {
    std::vector<long long> ms(args.size());
    for (size_t i = 0; i < args.size(); ++i) ms[i] = -args[i];
    return ms;
}

json ortho_params(const std::vector<long long>& args, OrthoConvention conv) {
    return json{{"args", args}, {"convention", conv == OrthoConvention::Reversed ? "reversed" : "plain"}};
}

}  // namespace

Report orthogonality_defect_inf(const Fq& f, const std::vector<long long>& args,
                                std::optional<int> precision, OrthoConvention conv) {
    if (args.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    const int r = int(args.size());
    bool all_nonpos = true, all_pos = true;
    for (long long a : args) {
        all_nonpos = all_nonpos && a <= 0;
        all_pos = all_pos && a >= 1;
    }

    Report rep;
    rep.identity = "orthogonality_inf";
    rep.params = ortho_params(args, conv);

    if (all_nonpos) {
        const fq_elem minus_one = f.neg(f.one());
        Poly defect(f);
        for (int l = 0; l <= r; ++l) {
            std::vector<long long> za = negated(zeta_args(args, l, conv));
            std::vector<long long> sa = negated(std::vector<long long>(args.begin(), args.begin() + (r - l)));
            Poly term = za.empty() ? Poly::one(f) : zeta_inf_neg(f, {za, false});
            if (!sa.empty()) term *= zeta_inf_neg(f, {sa, true});
            if (l % 2 == 1) term = term.scaled(minus_one);
            defect += term;
        }
        rep.holds = defect.is_zero();
        rep.witnesses = json{{"lhs", poly_to_json(defect)}, {"rhs", poly_to_json(Poly(f))}};
        return rep;
    }

    if (!all_pos) throw std::invalid_argument("mixed-sign tuples are not in the function's domain");
    if (!precision) throw std::invalid_argument("positive tuples need a precision");
    const int N = *precision;
    rep.params["precision"] = N;
    const fq_elem minus_one = f.neg(f.one());
    Laurent defect = Laurent::zero(f, N);
    for (int l = 0; l <= r; ++l) {
        std::vector<long long> za = zeta_args(args, l, conv);
        std::vector<long long> sa(args.begin(), args.begin() + (r - l));
        Laurent term = za.empty() ? Laurent::one(f, N) : zeta_inf_pos(f, {za, false}, N);
        if (!sa.empty()) term = term * zeta_inf_pos(f, {sa, true}, N);
        if (l % 2 == 1) term = term.scaled(minus_one);
        defect = defect + term;
    }
    rep.holds = equal_through(defect, Laurent::zero(f, N), N);
    rep.witnesses = json{{"lhs", laurent_to_json(defect)}, {"rhs", "0"}};
    return rep;
}

Report orthogonality_defect_v(const VPlace& place, const std::vector<long long>& args,
                              std::optional<int> level, OrthoConvention conv) {
    if (args.empty()) throw std::invalid_argument("tuple depth must be >= 1");
    const Fq& f = place.field();
    const int r = int(args.size());
    bool all_nonpos = true;
    for (long long a : args) all_nonpos = all_nonpos && a <= 0;

    Report rep;
    rep.identity = "orthogonality_v";
    rep.params = ortho_params(args, conv);
    rep.params["v"] = poly_to_json(place.v());

    if (all_nonpos && !level) {
        const fq_elem minus_one = f.neg(f.one());
        Poly defect(f);
        for (int l = 0; l <= r; ++l) {
            std::vector<long long> za = negated(zeta_args(args, l, conv));
            std::vector<long long> sa = negated(std::vector<long long>(args.begin(), args.begin() + (r - l)));
            Poly term = za.empty() ? Poly::one(f) : zeta_v_neg(place, {za, false});
            if (!sa.empty()) term *= zeta_v_neg(place, {sa, true});
            if (l % 2 == 1) term = term.scaled(minus_one);
            defect += term;
        }
        rep.holds = defect.is_zero();
        rep.witnesses = json{{"lhs", poly_to_json(defect)}, {"rhs", poly_to_json(Poly(f))}};
        return rep;
    }

    if (!level) throw std::invalid_argument("general integer tuples need a level");
    const int E = *level;
    rep.params["level"] = E;
    const fq_elem minus_one = f.neg(f.one());
    VAdic defect = VAdic::zero(place, E);
    for (int l = 0; l <= r; ++l) {
        std::vector<long long> za = zeta_args(args, l, conv);
        std::vector<long long> sa(args.begin(), args.begin() + (r - l));
        VAdic term = VAdic::one(place, E);
        if (!za.empty()) term = zeta_v_eval(place, {za, false}, E);
        if (!sa.empty()) term = term * zeta_v_eval(place, {sa, true}, E);
        if (l % 2 == 1) term = VAdic(place, E, term.value().scaled(minus_one));
        defect = defect + term;
    }
    rep.holds = defect.is_zero();
    rep.witnesses = json{{"lhs", vadic_to_json(defect)}, {"rhs", "0"}};
    return rep;
}

Report interpolation_check(const VPlace& place, long long m) {
    if (m < 1) throw std::invalid_argument("interpolation_check needs m >= 1");
    const Fq& f = place.field();
    Poly lhs = zeta_v_neg(place, {{m}, false});
    Poly rhs = (Poly::one(f) - place.v_pow(int(m))) * zeta_inf_neg(f, {{m}, false});
    Report rep;
    rep.identity = "interpolation";
    rep.params = json{{"m", m}, {"v", poly_to_json(place.v())}};
    rep.holds = lhs == rhs;
    rep.witnesses = json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
    return rep;
}

Report difference_identity_check(const VPlace& place, const std::vector<long long>& ms, bool star) {
    const Fq& f = place.field();
    const int r = int(ms.size());
    if (r == 0) throw std::invalid_argument("tuple depth must be >= 1");
    const int d = place.degree();
    const int q = f.q();
    const fq_elem minus_one = f.neg(f.one());

    Poly lhs = zeta_v_neg(place, {ms, star}) - zeta_inf_neg(f, {ms, star});

    Poly rhs(f);
    for (int l = 1; l <= r; ++l) {
        std::vector<long long> tail(ms.begin() + l, ms.end());
        Poly outer = detail::zeta_truncated_any(f, d, tail, star);
        if (outer.is_zero()) continue;
        Poly inner(f);
        std::vector<long long> a(l, 0);
        auto rec = [&](auto&& self, int j, Poly partial, long long asum, bool hit_top) -> void {
            if (partial.is_zero()) return;
            if (j == l) {
                if (!hit_top) return;  // the sum runs over a with a_j = m_j for some j
                Poly z = zeta_inf_neg(f, {std::vector<long long>(a.begin(), a.end()), star});
                if (z.is_zero()) return;
                inner += place.v_pow(int(asum)) * partial * z;
                return;
            }
            for (long long aj = ms[j] % (q - 1); aj <= ms[j]; aj += (q - 1)) {
                int b = binomial_mod_p(ms[j], aj, f.p());
                if (b == 0) continue;
                a[j] = aj;
                Poly zd = zeta_truncated(f, d, {ms[j] - aj}, false);
                self(self, j + 1, partial.scaled(f.from_int(b)) * zd, asum + aj, hit_top || aj == ms[j]);
            }
        };
        rec(rec, 0, Poly::one(f), 0, false);
        Poly term = outer * inner;
        if (l % 2 == 1) term = term.scaled(minus_one);
        rhs += term;
    }

    Report rep;
    rep.identity = star ? "difference_identity_star" : "difference_identity";
    rep.params = json{{"ms", ms}, {"star", star}, {"v", poly_to_json(place.v())}};
    rep.holds = lhs == rhs;
    rep.witnesses = json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
    return rep;
}

Report kummer_report(const VPlace& place, const std::vector<long long>& m,
                     const std::vector<long long>& l, int e, bool star) {
    CongruenceReport c = kummer_check(place, m, l, e, star);
    Report rep;
    rep.identity = "kummer_congruence";
    rep.params = json{{"m", m}, {"l", l}, {"e", e}, {"star", star}, {"v", poly_to_json(place.v())}};
    rep.holds = c.holds;
    rep.witnesses = json{{"lhs", vadic_to_json(c.lhs)}, {"rhs", vadic_to_json(c.rhs)}};
    return rep;
}

Report additivity_report(const MeasureSpec& spec, const Cylinder& c, int coordinate) {
    CheckReport r = additivity_check(spec, c, coordinate);
    json bases = json::array();
    for (const Poly& b : c.base) bases.push_back(poly_to_json(b));
    Report rep;
    rep.identity = "measure_additivity";
    rep.params = json{{"base", bases}, {"levels", c.levels}, {"coordinate", coordinate},
                      {"star", spec.star}, {"v", poly_to_json(spec.place->v())}};
    rep.holds = r.holds;
    rep.witnesses = json{{"lhs", vadic_to_json(r.lhs)}, {"rhs", vadic_to_json(r.rhs)}};
    return rep;
}

Report integral_inf_neg_report(const VPlace& place, const std::vector<long long>& ms, bool star,
                               const std::vector<int>& e_schedule) {
    IntegralReport r = integral_check_inf_neg(place, ms, star, e_schedule);
    Report rep;
    rep.identity = "integral_inf_neg";
    rep.params = json{{"ms", ms}, {"star", star}, {"v", poly_to_json(place.v())},
                      {"e_schedule", e_schedule}};
    rep.holds = r.holds;
    rep.witnesses = json{{"lhs", r.lhs}, {"rhs", r.rhs}};
    return rep;
}

Report integral_v_units_report(const MeasureSpec& spec, const std::vector<long long>& ts,
                               const std::vector<int>& e_schedule, int target_level) {
    IntegralReport r = integral_check_v_units(spec, ts, e_schedule, target_level);
    json sig = json::array();
    for (const VAdic& s : spec.sigmas) sig.push_back(poly_to_json(s.value()));
    Report rep;
    rep.identity = "integral_v_units";
    rep.params = json{{"ts", ts}, {"star", spec.star}, {"sigmas", sig},
                      {"v", poly_to_json(spec.place->v())}, {"e_schedule", e_schedule},
                      {"target_level", target_level}};
    rep.holds = r.holds;
    rep.witnesses = json{{"lhs", r.lhs}, {"rhs", r.rhs}};
    return rep;
}

Report recursion_inf_report(const VPlace& place, const ExponentTuple& t) {
    Poly lhs = zeta_inf_neg_recursive(place, t);
    Poly rhs = zeta_inf_neg(place.field(), t);
    Report rep;
    rep.identity = t.star ? "recursion_inf_star" : "recursion_inf";
    rep.params = json{{"ms", t.ms}, {"star", t.star}, {"v", poly_to_json(place.v())}};
    rep.holds = lhs == rhs;
    rep.witnesses = json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
    return rep;
}

Report recursion_v_report(const VPlace& place, const ExponentTuple& t) {
    Poly lhs = zeta_v_via_recursion(place, t);
    Poly rhs = zeta_v_neg(place, t);
    Report rep;
    rep.identity = t.star ? "recursion_v_star" : "recursion_v";
    rep.params = json{{"ms", t.ms}, {"star", t.star}, {"v", poly_to_json(place.v())}};
    rep.holds = lhs == rhs;
    rep.witnesses = json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
    return rep;
}

Report roundtrip_report(const VPlace& place, const ExponentTuple& t) {
    Poly lhs = infty_from_v(place, t);
    Poly rhs = zeta_inf_neg(place.field(), t);
    Report rep;
    rep.identity = "infty_from_v_roundtrip";
    rep.params = json{{"ms", t.ms}, {"star", t.star}, {"v", poly_to_json(place.v())}};
    rep.holds = lhs == rhs;
    rep.witnesses = json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
    return rep;
}

}  // namespace fqmzv
