// Modified Macdonald polynomials from their defining axioms, the
// Hall-Littlewood specialization, and flag-count polynomials.
#pragma once

#include "hlv/symfunc.hpp"

namespace hlv {

// H~_lambda in the monomial basis over Q(q,t), solved from the axioms
//   H~[(t-1)X] supported on mu <= lambda,
//   H~[(q-1)X] supported on mu <= lambda',
//   coefficient of m_(n) equal to 1,
// and memoized per degree. Results live in the core variable set.
const SymFunc& macdonald_htilde(const Partition& lambda);

// t = 0 specialization of H~_lambda.
SymFunc hall_littlewood(const Partition& lambda);

// (H_lambda[Z;q], h_mu[Z]): the number of partial flags of type mu fixed by
// the standard nilpotent of type lambda, as a polynomial in q.
Scalar flag_count_poly(const Partition& lambda, const std::vector<int>& mu);

struct MacdonaldAxiomReport {
    bool triangular_t = false;     // H~[(t-1)X] in M_{<= lambda}
    bool triangular_q = false;     // H~[(q-1)X] in M_{<= lambda'}
    bool normalized = false;       // H~[1] = 1
    bool orthogonal = false;       // (H~_la, H~_mu)_{q,t} = 0 for mu != la
    bool norm_matches = false;     // (H~_la, H~_la)_{q,t} = z_la(q,t)
    bool schur_specializes = false; // H~[X;q,q^{-1}] proportional to s_la[X/(1-q)]
    bool all() const {
        return triangular_t && triangular_q && normalized && orthogonal && norm_matches &&
               schur_specializes;
    }
};

MacdonaldAxiomReport verify_macdonald_axioms(const Partition& lambda);

} // namespace hlv
