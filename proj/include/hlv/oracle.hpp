// Exhaustive finite-field counting used to verify the symbolic side at desk
// scale. Everything here is enumerated, never sampled, and hard-capped.
#pragma once

#include <map>
#include <utility>

#include "hlv/symfunc.hpp"

namespace hlv {

// Formal Q-linear combination of nilpotent classes [N_lambda] at a fixed prime.
using HallVector = std::map<Partition, Rat, PartitionLess>;

// Number of partial flags of type mu in F_p^n fixed by the standard nilpotent
// of type lambda.
long long flag_count_bruteforce(const Partition& lambda, const std::vector<int>& mu, int p);

// |{g in GL_n(F_p) : g N_lambda = N_lambda g}|.
long long centralizer_order(const Partition& lambda, int p);

// Coefficients of sum_n T^n sum_{lambda of n} 1/|Aut(N_lambda)| for n <= nmax.
std::vector<Rat> nilpotent_mass_series(int nmax, int p);

// Lattice count: lower-triangular representatives with monomial diagonal of
// total order d.
long long grassmannian_count(int n, int d, int p);

// [N_lambda] * [N_nu] via subobject counting in (F_p^m, N_mu).
HallVector hall_product_bruteforce(const Partition& lambda, const Partition& nu, int p);

// sum_mu m_mu * (flag count), extended linearly; lands on Hall-Littlewood
// polynomials at q = p.
SymFunc I_map(const HallVector& v, int p);

// The two-point count on the projective line: pairs of nilpotent
// block-upper-triangular matrices with matching diagonal blocks, weighted by
// the parabolic normalization. Two-alphabet tensor with rational coefficients.
TensorSym p1_two_point_Cmu(const std::vector<int>& mu, int p);

// The assembled two-point generating series: (T-degree, t-degree) -> tensor,
// summing t^{sum d_i mu_i} C_mu over splitting types.
std::map<std::pair<int, int>, TensorSym> p1_two_point_assembled(int nmax, int tmax, int p);

// Weighted count of (bundle, nilpotent endomorphism) pairs on the projective
// line with one marked point, of global type lambda, as a t-series of
// symmetric functions recording the fiber type at the marked point.
std::vector<SymFunc> p1_parabolic_omega(const Partition& lambda, int p, int dmax);

// Type of a constant nilpotent matrix over F_p (kernel dimension increments).
Partition fp_nilpotent_type(const std::vector<std::vector<int>>& mat, int p);

} // namespace hlv
