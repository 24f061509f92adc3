#include "hlv/hlv.hpp"

#include "hlv/macdonald.hpp"

namespace hlv {

void ParabolicData::validate() const {
    if (rank < 1) throw Error("rank must be positive");
    for (auto& row : mults) {
        int sum = 0;
        for (int r : row) {
            if (r < 0) throw Error("multiplicities must be non-negative");
            sum += r;
        }
        if (sum != rank) throw Error("multiplicities at each point must sum to the rank");
    }
}

namespace {

// prod_i H~_la[X_i] as a k-alphabet tensor: an outer product, slot by slot.
TensorSym macdonald_tensor(const Partition& la, int k, const VarSetPtr& vars) {
    SymFunc h = extend_vars(macdonald_htilde(la), vars);
    TensorSym acc = TensorSym::one(k, vars, Basis::m);
    for (int slot = 0; slot < k; ++slot) {
        TensorSym next(k, vars, Basis::m);
        for (auto& [tu, c] : acc.terms()) {
            for (auto& [mu, d] : h.terms()) {
                TensorSym::Tuple t2 = tu;
                t2[slot] = mu;
                next.add_term(t2, c * d);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

MultiSymSeries hlv_kernel(const CurveData& c, int nmax) {
    const VarSetPtr& vars = c.vars;
    MultiSymSeries out(c.punctures, nmax, vars);
    Scalar one(vars, 1);
    for (int n = 0; n <= nmax; ++n) {
        TensorSym coeff(c.punctures, vars, Basis::m);
        for (const Partition& la : tables::partitions_of(n)) {
            Scalar weight = one;
            for (const Scalar& s : c.sigma) weight *= N_u(la, s.inverse());
            weight /= N_u(la, one);
            coeff += macdonald_tensor(la, c.punctures, vars) * weight;
        }
        coeff = coeff.map_coefficients([](const Scalar& s) { return s.reduced(); });
        out.set(n, std::move(coeff));
    }
    return out;
}

MultiSymSeries hlv_H(const CurveData& c, int nmax) {
    const VarSetPtr& vars = c.vars;
    Scalar q = Scalar::variable(vars, "q"), t = Scalar::variable(vars, "t"), one(vars, 1);
    MultiSymSeries h = plog(hlv_kernel(c, nmax)) * ((q - one) * (one - t));
    return h.map_coefficients([&](const Scalar& s) {
        try {
            return Scalar(s.to_laurent());
        } catch (const NotDivisible&) {
            throw IntegralityFailure("kernel logarithm coefficient is not polynomial");
        }
    });
}

int dim_moduli(int genus, const ParabolicData& p) {
    p.validate();
    int k = p.punctures();
    long long dim = static_cast<long long>(2 * genus - 2 + k) * p.rank * p.rank + 2;
    for (auto& row : p.mults) {
        for (int r : row) dim -= static_cast<long long>(r) * r;
    }
    if (dim < 0) throw NegativeDimension("dimension " + std::to_string(dim));
    return static_cast<int>(dim);
}

Scalar poincare_polynomial(int genus, const ParabolicData& p) {
    p.validate();
    int k = p.punctures();
    int r = p.rank;
    CurveData c = CurveData::symbolic(genus, k);
    const VarSetPtr& vars = c.vars;

    TensorSym top = hlv_H(c, r).at(r);
    std::vector<Partition> mus;
    for (auto& row : p.mults) {
        std::vector<int> nz;
        for (int x : row)
            if (x > 0) nz.push_back(x);
        mus.push_back(sort_to_partition(nz));
    }
    Scalar paired = top.pair_with_h(mus);

    // q -> s^-2, t -> 1, sigma_i -> s^-1; calibrated on the rank-1 torus
    Scalar s = Scalar::variable(vars, "s");
    std::map<std::string, Scalar> bind{{"q", s.pow(-2)}, {"t", Scalar(vars, 1)}};
    for (int i = 1; i <= genus; ++i) bind.emplace("sigma" + std::to_string(i), s.pow(-1));
    Scalar value = paired.substitute(bind) * s.pow(dim_moduli(genus, p));

    MultiPoly laurent;
    try {
        laurent = value.to_laurent();
    } catch (const NotDivisible&) {
        throw IntegralityFailure("Poincare value is not a Laurent polynomial");
    }
    size_t s_index = vars->index("s");
    for (auto& [e, coeff] : laurent.terms()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i != s_index && e[i] != 0)
                throw IntegralityFailure("Poincare value involves a variable besides s");
        }
        if (coeff.get_den() != 1) throw IntegralityFailure("Poincare coefficient is not an integer");
    }
    return Scalar(laurent);
}

long long euler_form_parabolic(const ParInvariants& e, const ParInvariants& f, int genus,
                               const std::vector<int>& point_degrees) {
    long long chi = static_cast<long long>(1 - genus) * e.rank * f.rank;
    chi += static_cast<long long>(e.rank) * f.deg - static_cast<long long>(f.rank) * e.deg;
    for (size_t i = 0; i < point_degrees.size(); ++i) {
        const auto& re = i < e.jumps.size() ? e.jumps[i] : std::vector<int>{};
        const auto& rf = i < f.jumps.size() ? f.jumps[i] : std::vector<int>{};
        long long cross = 0;
        for (size_t j = 0; j < re.size(); ++j) {
            for (size_t j2 = j + 1; j2 < rf.size(); ++j2) cross += static_cast<long long>(re[j]) * rf[j2];
        }
        chi -= point_degrees[i] * cross;
    }
    return chi;
}

long long euler_form_higgs(const ParInvariants& e, const ParInvariants& f, int genus,
                           const std::vector<int>& point_degrees) {
    long long dsum = 0;
    for (int d : point_degrees) dsum += d;
    long long chi = (2 - 2 * genus - dsum) * static_cast<long long>(e.rank) * f.rank;
    for (size_t i = 0; i < point_degrees.size(); ++i) {
        const auto& re = i < e.jumps.size() ? e.jumps[i] : std::vector<int>{};
        const auto& rf = i < f.jumps.size() ? f.jumps[i] : std::vector<int>{};
        long long dot = 0;
        for (size_t j = 0; j < std::min(re.size(), rf.size()); ++j)
            dot += static_cast<long long>(re[j]) * rf[j];
        chi += point_degrees[i] * dot;
    }
    return chi;
}

std::vector<SymFunc> count_gets_macdonald_series(const Partition& lambda, int dmax) {
    VarSetPtr vars = VarSet::core();
    Scalar q = Scalar::variable(vars, "q"), t = Scalar::variable(vars, "t"), one(vars, 1);
    Scalar denom = one;
    for (auto [a, l] : lambda.cells()) {
        if (l != 0) denom *= one - t.pow(l) * q.pow(-a - 1);
    }
    const SymFunc& h = macdonald_htilde(lambda);
    std::vector<SymFunc> out(dmax + 1, SymFunc(vars, Basis::m));
    for (auto& [mu, c] : h.terms()) {
        std::vector<Scalar> layers = expand_in_var(c / denom, "t", dmax);
        for (int j = 0; j <= dmax; ++j) out[j].add_term(mu, layers[j]);
    }
    return out;
}

std::vector<Scalar> springer_count(const Partition& lambda, const Partition& mu, int dmax) {
    if (lambda.size() != mu.size()) throw SizeMismatch("springer count needs |lambda| = |mu|");
    auto series = count_gets_macdonald_series(lambda, dmax);
    std::vector<Scalar> out;
    out.reserve(series.size());
    for (auto& layer : series) out.push_back(layer.coefficient(mu));
    return out;
}

} // namespace hlv
