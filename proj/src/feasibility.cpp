#include "hsc/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsc {

namespace {

// a + b*sqrt(D) with exact integer coefficients; D fixed per computation.
struct Quad {
    BigInt a;
    BigInt b;
};

Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }

Quad mul(const Quad& x, const Quad& y, const BigInt& D) {
    return {x.a * y.a + x.b * y.b * D, x.a * y.b + x.b * y.a};
}

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Exact sign of a + b*sqrt(D), D > 0.
int sign_of(const Quad& x, const BigInt& D) {
    const int sa = sign_of(x.a), sb = sign_of(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const int cmp = sign_of(x.a * x.a - x.b * x.b * D);
    return sa > 0 ? cmp : -cmp;
}

bool is_perfect_square(const BigInt& x, BigInt& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

} // namespace

SrgVerdict srg_feasible(const SrgParams& p) {
    p.validate();
    SrgVerdict v;

    if (!p.counting_identity_holds()) v.failures.push_back("counting identity fails");

    const BigInt n = p.n, k = p.k;
    const BigInt e = BigInt(p.lambda) - p.mu;
    const BigInt D = e * e + 4 * (k - p.mu);
    if (D <= 0) {
        v.failures.push_back("discriminant not positive");
        v.feasible = v.failures.empty();
        return v;
    }

    // Multiplicity integrality, with the conference half-case.
    const BigInt T = 2 * k + (n - 1) * e;
    BigInt sq;
    const bool square = is_perfect_square(D, sq);
    if (T == 0) {
        if (e != -1 || (p.n - 1) % 2 != 0) {
            v.failures.push_back("zero eigenvalue-balance outside the conference shape");
        } else {
            SrgSpectrum s;
            s.conference = true;
            s.f = s.g_mult = (p.n - 1) / 2;
            const double rd = std::sqrt((double)D);
            s.r = (-1 + rd) / 2;
            s.s = (-1 - rd) / 2;
            v.spectrum = s;
        }
    } else if (!square) {
        v.failures.push_back("multiplicities irrational: discriminant is not a perfect square");
    } else if (T % sq != 0) {
        v.failures.push_back("multiplicities not integral");
    } else {
        const BigInt q = T / sq;
        const BigInt f2 = (n - 1) - q, g2 = (n - 1) + q;
        if (f2 % 2 != 0 || f2 < 0 || g2 < 0) {
            v.failures.push_back("multiplicities not nonnegative integers");
        } else {
            SrgSpectrum s;
            s.f = (long long)(f2 / 2);
            s.g_mult = (long long)(g2 / 2);
            s.r = (double)((e + sq) / 2);
            s.s = (double)((e - sq) / 2);
            v.spectrum = s;
        }
    }

    // Krein conditions on R = 2r, S = 2s as exact quadratic integers.
    const Quad R{e, 1}, S{e, -1};
    const Quad two{2, 0}, twok{2 * k, 0};
    const Quad RS{e * e - D, 0};
    const Quad n1 = mul(twok + R, mul(S + two, S + two, D), D) -
                    mul(two, mul(R + two, twok + R + RS, D), D);
    const Quad n2 = mul(twok + S, mul(R + two, R + two, D), D) -
                    mul(two, mul(S + two, twok + S + RS, D), D);
    v.krein1_sign = sign_of(n1, D);
    v.krein2_sign = sign_of(n2, D);
    if (v.krein1_sign < 0) v.failures.push_back("Krein condition 1 fails");
    if (v.krein2_sign < 0) v.failures.push_back("Krein condition 2 fails");

    if (v.spectrum) {
        const BigInt f = v.spectrum->f, g = v.spectrum->g_mult;
        if (2 * n > f * (f + 3)) v.failures.push_back("absolute bound fails for f");
        if (2 * n > g * (g + 3)) v.failures.push_back("absolute bound fails for g");
    }

    v.feasible = v.failures.empty();
    return v;
}

std::vector<std::pair<SrgParams, SrgSpectrum>> enumerate_feasible(long long max_n) {
    if (max_n < 5) throw std::invalid_argument("enumerate_feasible: max_n < 5");
    std::vector<std::pair<SrgParams, SrgSpectrum>> out;
    for (long long n = 5; n <= max_n; ++n)
        for (long long k = 1; k <= n - 2; ++k)
            for (long long lambda = 0; lambda < k; ++lambda) {
                const long long num = k * (k - lambda - 1);
                const long long den = n - k - 1;
                if (num % den != 0) continue;
                const long long mu = num / den;
                if (mu < 0 || mu > k) continue;
                SrgParams p{n, k, lambda, mu};
                SrgVerdict v = srg_feasible(p);
                if (v.feasible) out.emplace_back(p, *v.spectrum);
            }
    return out;
}

std::vector<long long> moore_valencies(long long k_max) {
    if (k_max < 57) throw std::invalid_argument("moore_valencies: k_max < 57");
    std::vector<long long> out;
    for (long long k = 2; k <= k_max; ++k)
        if (srg_feasible({k * k + 1, k, 0, 1}).feasible) out.push_back(k);
    return out;
}

GqVerdict gq_bound(const GenPolygonParams& p) {
    if (p.gon != 4 && p.gon != 8)
        throw std::invalid_argument("gq_bound: gonality must be 4 or 8");
    if (p.s_pts < 1) throw std::invalid_argument("gq_bound: s must be positive");
    if (p.t_lines <= 1) throw std::invalid_argument("gq_bound: requires t > 1");
    GqVerdict v;
    v.pass = BigInt(p.s_pts) <= BigInt(p.t_lines) * p.t_lines;
    if (p.s_pts > 1) {
        v.dual_checked = true;
        v.dual_pass = BigInt(p.t_lines) <= BigInt(p.s_pts) * p.s_pts;
    }
    return v;
}

} // namespace hsc
