#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fqmzv/measures.hpp"

namespace fqmzv {

// Outcome of one identity verification.  A failed check always carries both
// witnesses.  elapsed_ms is informational and excluded from canonical
// (byte-reproducible) serializations unless timings are requested.
struct Report {
    std::string identity;
    nlohmann::json params;
    bool holds = false;
    nlohmann::json witnesses;  // {"lhs": ..., "rhs": ...}
    double elapsed_ms = 0.0;
};

nlohmann::json report_to_json(const Report& r, bool with_timings = false);

// Argument-order convention for the alternating star/non-star convolution.
// Reversed is the stated convention; Plain exists for diagnosis only and is
// expected to fail on asymmetric tuples.
enum class OrthoConvention { Reversed, Plain };

// sum_{l=0}^{r} (-1)^l zeta(s_r,...,s_{r-l+1}) zeta*(s_1,...,s_{r-l}) at the
// infinite place.  args are the integer arguments s_j: all <= 0 gives the
// exact check, all >= 1 needs `precision` and checks the Laurent defect
// through it.
Report orthogonality_defect_inf(const Fq& f, const std::vector<long long>& args,
                                std::optional<int> precision = std::nullopt,
                                OrthoConvention conv = OrthoConvention::Reversed);

// Same sum at the place v.  All-nonpositive argument tuples are checked
// exactly in A; general integer tuples need `level`.
Report orthogonality_defect_v(const VPlace& place, const std::vector<long long>& args,
                              std::optional<int> level = std::nullopt,
                              OrthoConvention conv = OrthoConvention::Reversed);

// zeta_v(-m) = (1 - v^m) zeta_inf(-m), exact in A; m >= 1 (the m = 0
// endpoint is excluded here and covered by a dedicated unit test).
Report interpolation_check(const VPlace& place, long long m);

// The difference identity: zeta_v(-m) - zeta_inf(-m) equals the alternating
// sum over sub-tuples with some a_j = m_j (star version per flag), exact in A.
Report difference_identity_check(const VPlace& place, const std::vector<long long>& ms, bool star);

// Report wrappers around the remaining verifiers, so the suite and the CLI
// speak one format.
Report kummer_report(const VPlace& place, const std::vector<long long>& m,
                     const std::vector<long long>& l, int e, bool star = false);
Report additivity_report(const MeasureSpec& spec, const Cylinder& c, int coordinate);
Report integral_inf_neg_report(const VPlace& place, const std::vector<long long>& ms, bool star,
                               const std::vector<int>& e_schedule);
Report integral_v_units_report(const MeasureSpec& spec, const std::vector<long long>& ts,
                               const std::vector<int>& e_schedule, int target_level);
Report recursion_inf_report(const VPlace& place, const ExponentTuple& t);
Report recursion_v_report(const VPlace& place, const ExponentTuple& t);
Report roundtrip_report(const VPlace& place, const ExponentTuple& t);

}  // namespace fqmzv
