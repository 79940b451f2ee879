#ifndef HSC_FEASIBILITY_HPP
#define HSC_FEASIBILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsc/bigint.hpp"
#include "hsc/graph.hpp"

namespace hsc {

// Nontrivial eigenvalues and multiplicities of a putative strongly regular
// graph. In the conference case f = g_mult = (n-1)/2 and r, s are the
// irrational (-1 +- sqrt(n))/2.
struct SrgSpectrum {
    double r = 0.0;
    double s = 0.0;
    long long f = 0;
    long long g_mult = 0;
    bool conference = false;
};

// Outcome of the four-condition battery: counting identity, multiplicity
// integrality (or conference half-case), Krein conditions, absolute bound.
// All arithmetic is exact; infeasibility is a verdict, not an error.
struct SrgVerdict {
    bool feasible = false;
    std::vector<std::string> failures;
    // Present when the multiplicities resolved (integral or conference).
    std::optional<SrgSpectrum> spectrum;
    // Exact signs of the two Krein slacks; 0 marks a boundary case such as
    // the pentagon. Only meaningful when the discriminant is positive.
    int krein1_sign = 0;
    int krein2_sign = 0;
};

SrgVerdict srg_feasible(const SrgParams& p);

// All feasible parameter sets with 5 <= n <= max_n, sorted by
// (n, k, lambda, mu). Complement-closed.
std::vector<std::pair<SrgParams, SrgSpectrum>> enumerate_feasible(long long max_n);

// Valencies k in [2, k_max] for which (k^2+1, k, 0, 1) is feasible.
std::vector<long long> moore_valencies(long long k_max);

struct GenPolygonParams {
    long long s_pts = 0;
    long long t_lines = 0;
    int gon = 0;
};

struct GqVerdict {
    bool pass = false;
    // t_lines <= s_pts^2, evaluated when s_pts > 1.
    bool dual_checked = false;
    bool dual_pass = false;
};

// PASS iff s_pts <= t_lines^2. Requires gon in {4, 8} and t_lines > 1;
// throws std::invalid_argument otherwise.
GqVerdict gq_bound(const GenPolygonParams& p);

} // namespace hsc

#endif
