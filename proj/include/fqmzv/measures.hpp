#pragma once

#include <string>
#include <vector>

#include "fqmzv/zeta_v.hpp"

namespace fqmzv {

// Compact open box (alpha_1,...,alpha_r) + m_v^{e_1} x ... x m_v^{e_r},
// with canonical representatives deg alpha_j < e_j * deg v.
struct Cylinder {
    std::vector<Poly> base;
    std::vector<int> levels;

    static Cylinder uniform(std::vector<Poly> base, int e);
    int depth() const { return int(base.size()); }
};

// Parameters of the measures mu^{sigma} and mu*^{sigma} on A_v^r: the
// sigma weights (exactly representable v-units), the star flag, and the
// working level for all volume outputs.
struct MeasureSpec {
    const VPlace* place = nullptr;
    std::vector<VAdic> sigmas;
    bool star = false;
    int work_level = 1;

    static MeasureSpec make(const VPlace& place, const std::vector<Poly>& sigmas, bool star,
                            int work_level);
    static MeasureSpec make(const VPlace& place, std::vector<VAdic> sigmas, bool star,
                            int work_level);
    int depth() const { return int(sigmas.size()); }
};

// Closed-form volume of a cylinder at spec.work_level.  Uniform cylinders
// use the case analysis directly; mixed-level cylinders are refined to the
// maximum level and summed (finite additivity).
VAdic mu_cylinder(const MeasureSpec& spec, const Cylinder& c);

struct CheckReport {
    bool holds;
    VAdic lhs, rhs;
};

// Refines `coordinate` by one level, sums the q^d sub-volumes and compares
// with the parent volume.
CheckReport additivity_check(const MeasureSpec& spec, const Cylinder& c, int coordinate);

enum class Domain { Full, Units };

// Riemann sum over the canonical residues at level e: sum of
// x_1^{t_1}...x_r^{t_r} mu(x + (m_v^e)^r), restricted to unit residues for
// Domain::Units.  Full domain requires t_j >= 0.
VAdic riemann_integrate(const MeasureSpec& spec, const std::vector<long long>& ts, Domain domain,
                        int e);

// sigma = (1,...,1) Riemann sum over the full domain, exact in A (volumes
// lie in the prime subfield, sample points are polynomials).
Poly riemann_integrate_exact(const VPlace& place, const std::vector<long long>& ms, bool star,
                             int e);

struct IntegralReport {
    bool holds;
    int achieved_level = 0;
    std::string lhs, rhs;  // witnesses of the first failure, if any
};

// zeta_inf(-m) against the exact Riemann sums: equality in A for every e in
// the schedule with d*e >= max m_j + 2.
IntegralReport integral_check_inf_neg(const VPlace& place, const std::vector<long long>& ms,
                                      bool star, const std::vector<int>& e_schedule);

// zeta_v((sigma_1,-t_1),...) against the unit-domain Riemann sums: agreement
// mod m_v^{E(e)} with E(e) = min(e, term_bound_v(d*e+1)), which is
// nondecreasing and unbounded in e.  Fails the schedule if E never reaches
// target_level.
IntegralReport integral_check_v_units(const MeasureSpec& spec, const std::vector<long long>& ts,
                                      const std::vector<int>& e_schedule, int target_level);

}  // namespace fqmzv
