// The partition-indexed kernel over a curve, its plethystic logarithm with
// certified polynomial coefficients, the parabolic dimension and Euler forms,
// and the Poincare-polynomial endpoint.
#pragma once

#include "hlv/series.hpp"

namespace hlv {

struct CurveData {
    int genus = 0;
    int punctures = 0;
    std::vector<Scalar> sigma; // one value per handle; usually symbolic
    VarSetPtr vars;

    static CurveData symbolic(int genus, int punctures) {
        CurveData c;
        c.genus = genus;
        c.punctures = punctures;
        c.vars = VarSet::with_sigmas(genus);
        for (int i = 1; i <= genus; ++i)
            c.sigma.push_back(Scalar::variable(c.vars, "sigma" + std::to_string(i)));
        return c;
    }
};

struct ParabolicData {
    int rank = 1;
    std::vector<std::vector<int>> mults; // mults[i][j] = r_{i,j}, row sums = rank

    int punctures() const { return static_cast<int>(mults.size()); }
    void validate() const;
};

// sum over partitions of T-degree of (prod_i N_la(sigma_i^{-1}) / N_la(1))
// T^{|la|} prod_j H~_la[X_j], in the monomial tensor basis.
MultiSymSeries hlv_kernel(const CurveData& c, int nmax);

// (q-1)(1-t) * plog(kernel); every coefficient certified to be a Laurent
// polynomial in q, t, sigma via exact division. Throws IntegralityFailure.
MultiSymSeries hlv_H(const CurveData& c, int nmax);

// (2g-2+k) r^2 - sum r_{i,j}^2 + 2.
int dim_moduli(int genus, const ParabolicData& p);

// Signed Poincare polynomial as a Laurent polynomial in s (s^2 = q slot).
Scalar poincare_polynomial(int genus, const ParabolicData& p);

struct ParInvariants {
    int rank = 0;
    int deg = 0;
    std::vector<std::vector<int>> jumps; // jumps[i][j] = r_{i,j}
};

// (1-g) rE rF + rE degF - rF degE - sum_i d_i sum_{j<j'} r_{i,j}(E) r_{i,j'}(F).
long long euler_form_parabolic(const ParInvariants& e, const ParInvariants& f, int genus,
                               const std::vector<int>& point_degrees);
// (2-2g-sum d_i) rE rF + sum_i d_i sum_j r_{i,j}(E) r_{i,j}(F).
long long euler_form_higgs(const ParInvariants& e, const ParInvariants& f, int genus,
                           const std::vector<int>& point_degrees);

// H~_lambda[X;q,t] / prod_{cells, leg != 0} (1 - t^l q^{-a-1}) as a t-power
// series of symmetric functions with coefficients in Q(q).
std::vector<SymFunc> count_gets_macdonald_series(const Partition& lambda, int dmax);

// Pairing of the series above with h_mu: a t-series of scalars.
std::vector<Scalar> springer_count(const Partition& lambda, const Partition& mu, int dmax);

} // namespace hlv
