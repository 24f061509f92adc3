// Formal series in T whose T^n coefficient is a k-alphabet tensor with all
// partition sizes equal to n (the shape of every kernel in use here).
#pragma once

#include "hlv/symfunc.hpp"

namespace hlv {

class MultiSymSeries {
public:
    MultiSymSeries(int k, int nmax, VarSetPtr vars) : k_(k), nmax_(nmax), vars_(std::move(vars)) {}

    int alphabets() const { return k_; }
    int nmax() const { return nmax_; }
    const VarSetPtr& vars() const { return vars_; }

    // Insert the T^n coefficient; every tuple must consist of partitions of n.
    void set(int n, TensorSym coeff);
    // T^n coefficient (zero tensor when absent).
    TensorSym at(int n) const;
    const std::map<int, TensorSym>& coefficients() const { return coeff_; }

    friend MultiSymSeries operator+(const MultiSymSeries& a, const MultiSymSeries& b);
    friend MultiSymSeries operator-(const MultiSymSeries& a, const MultiSymSeries& b);
    friend MultiSymSeries operator*(const MultiSymSeries& a, const MultiSymSeries& b);
    friend MultiSymSeries operator*(const MultiSymSeries& a, const Scalar& c);

    friend bool operator==(const MultiSymSeries& a, const MultiSymSeries& b);

    template <typename F>
    MultiSymSeries map_coefficients(F&& f) const {
        MultiSymSeries r(k_, nmax_, vars_);
        for (auto& [n, c] : coeff_) {
            TensorSym mapped = c.map_coefficients(f);
            if (!mapped.is_zero()) r.coeff_.emplace(n, std::move(mapped));
        }
        return r;
    }

private:
    int k_;
    int nmax_;
    VarSetPtr vars_;
    std::map<int, TensorSym> coeff_;
};

// pExp = exp(sum_n p_n[.]/n), truncated at the series' nmax. The argument
// must have no T^0 term.
MultiSymSeries pexp(const MultiSymSeries& H);
// Inverse of pexp, extracted degree by degree. The argument must have T^0
// coefficient equal to 1.
MultiSymSeries plog(const MultiSymSeries& O);

// The two sides of the Cauchy identity pExp[T XY] = sum_la T^{|la|} h_la[X] m_la[Y],
// computed independently.
MultiSymSeries cauchy_kernel_pexp(int nmax, const VarSetPtr& vars);
MultiSymSeries cauchy_kernel_direct(int nmax, const VarSetPtr& vars);

} // namespace hlv
