#include "hlv/series.hpp"

namespace hlv {

void MultiSymSeries::set(int n, TensorSym coeff) {
    if (n < 0 || n > nmax_) throw Error("T-degree out of range");
    if (coeff.alphabets() != k_) throw Error("tensor arity mismatch");
    for (auto& [tu, c] : coeff.terms()) {
        for (auto& la : tu) {
            if (la.size() != n) throw Error("tuple degree differs from T-degree");
        }
    }
    if (coeff.is_zero()) coeff_.erase(n);
    else coeff_.insert_or_assign(n, std::move(coeff));
}

TensorSym MultiSymSeries::at(int n) const {
    auto it = coeff_.find(n);
    if (it != coeff_.end()) return it->second;
    return TensorSym(k_, vars_, Basis::m);
}

MultiSymSeries operator+(const MultiSymSeries& a, const MultiSymSeries& b) {
    MultiSymSeries r(a.k_, std::min(a.nmax_, b.nmax_), a.vars_);
    for (int n = 0; n <= r.nmax_; ++n) {
        TensorSym c = a.at(n) + b.at(n);
        if (!c.is_zero()) r.set(n, std::move(c));
    }
    return r;
}

MultiSymSeries operator-(const MultiSymSeries& a, const MultiSymSeries& b) {
    return a + b * Scalar(b.vars(), -1);
}

MultiSymSeries operator*(const MultiSymSeries& a, const MultiSymSeries& b) {
    MultiSymSeries r(a.k_, std::min(a.nmax_, b.nmax_), a.vars_);
    for (int n = 0; n <= r.nmax_; ++n) {
        TensorSym acc(a.k_, a.vars_, Basis::m);
        for (auto& [i, ca] : a.coeff_) {
            if (i > n) break;
            auto it = b.coeff_.find(n - i);
            if (it == b.coeff_.end()) continue;
            acc += ca * it->second;
        }
        if (!acc.is_zero()) r.set(n, std::move(acc));
    }
    return r;
}

MultiSymSeries operator*(const MultiSymSeries& a, const Scalar& c) {
    MultiSymSeries r(a.k_, a.nmax_, a.vars_);
    for (auto& [n, v] : a.coeff_) {
        TensorSym scaled = v * c;
        if (!scaled.is_zero()) r.coeff_.emplace(n, std::move(scaled));
    }
    return r;
}

bool operator==(const MultiSymSeries& a, const MultiSymSeries& b) {
    int nmax = std::min(a.nmax_, b.nmax_);
    for (int n = 0; n <= nmax; ++n) {
        if (!(a.at(n) == b.at(n))) return false;
    }
    return true;
}

namespace {

// Series with every coefficient in the p basis, for the exp/adams stages.
struct PSeries {
    int k;
    int nmax;
    VarSetPtr vars;
    std::map<int, TensorSym> coeff;

    TensorSym at(int n) const {
        auto it = coeff.find(n);
        return it == coeff.end() ? TensorSym(k, vars, Basis::p) : it->second;
    }
    void add(int n, const TensorSym& c) {
        if (c.is_zero()) return;
        auto it = coeff.find(n);
        if (it == coeff.end()) coeff.emplace(n, c);
        else {
            it->second += c;
            if (it->second.is_zero()) coeff.erase(it);
        }
    }
};

PSeries mul(const PSeries& a, const PSeries& b) {
    PSeries r{a.k, a.nmax, a.vars, {}};
    for (auto& [i, ca] : a.coeff) {
        for (auto& [j, cb] : b.coeff) {
            if (i + j > r.nmax) continue;
            r.add(i + j, ca * cb);
        }
    }
    return r;
}

} // namespace

MultiSymSeries pexp(const MultiSymSeries& H) {
    if (!H.at(0).is_zero()) throw ConstantTermPresent();
    int k = H.alphabets(), nmax = H.nmax();
    const VarSetPtr& vars = H.vars();

    PSeries hp{k, nmax, vars, {}};
    for (auto& [n, c] : H.coefficients()) hp.coeff.emplace(n, c.convert(Basis::p));

    // G = sum_{j >= 1} p_j[H]/j
    PSeries g{k, nmax, vars, {}};
    for (int j = 1; j <= nmax; ++j) {
        Scalar inv_j(vars, Rat(1, j));
        for (auto& [n, c] : hp.coeff) {
            if (n * j > nmax) continue;
            g.add(n * j, c.adams(j) * inv_j);
        }
    }

    // exp(G) = sum_j G^j / j!
    PSeries result{k, nmax, vars, {}};
    result.add(0, TensorSym::one(k, vars, Basis::p));
    PSeries power = result;
    Rat factorial = 1;
    for (int j = 1; j <= nmax; ++j) {
        power = mul(power, g);
        factorial *= j;
        Scalar w(vars, Rat(1) / factorial);
        for (auto& [n, c] : power.coeff) result.add(n, c * w);
    }

    MultiSymSeries out(k, nmax, vars);
    for (auto& [n, c] : result.coeff) out.set(n, c.convert(Basis::m));
    return out;
}

MultiSymSeries plog(const MultiSymSeries& O) {
    TensorSym c0 = O.at(0);
    if (!(c0 == TensorSym::one(O.alphabets(), O.vars(), Basis::m))) throw BadConstantTerm();
    int nmax = O.nmax();
    MultiSymSeries H(O.alphabets(), nmax, O.vars());
    for (int d = 1; d <= nmax; ++d) {
        // pexp(H_{<d}) agrees with O below degree d; the defect at degree d is H_d.
        TensorSym correction = O.at(d) - pexp(H).at(d);
        if (!correction.is_zero()) H.set(d, std::move(correction));
    }
    return H;
}

MultiSymSeries cauchy_kernel_pexp(int nmax, const VarSetPtr& vars) {
    MultiSymSeries H(2, nmax, vars);
    TensorSym t1(2, vars, Basis::m);
    t1.add_term({Partition{1}, Partition{1}}, Scalar(vars, 1)); // h1[X] h1[Y]
    H.set(1, std::move(t1));
    return pexp(H);
}

MultiSymSeries cauchy_kernel_direct(int nmax, const VarSetPtr& vars) {
    MultiSymSeries r(2, nmax, vars);
    for (int n = 0; n <= nmax; ++n) {
        TensorSym c(2, vars, Basis::m);
        for (const Partition& la : tables::partitions_of(n)) {
            SymFunc h = SymFunc::element(vars, Basis::h, la).convert(Basis::m);
            for (auto& [mu, hc] : h.terms()) c.add_term({mu, la}, hc);
        }
        r.set(n, std::move(c));
    }
    return r;
}

} // namespace hlv
