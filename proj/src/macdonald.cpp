#include "hlv/macdonald.hpp"

namespace hlv {

namespace {

// m_mu[c X] in m-coordinates, for the twist scalars c = (t-1) or (q-1):
// route through p, where p_k picks up the factor c.adams(k).
std::vector<Scalar> twisted_monomial(const Partition& mu, const Scalar& twist) {
    const VarSetPtr& vars = twist.vars();
    const auto& parts = tables::partitions_of(mu.size());
    std::vector<Scalar> out(parts.size(), Scalar(vars));
    std::vector<Rat> mp = tables::from_monomial(Basis::p, mu); // m_mu in p
    for (size_t i = 0; i < parts.size(); ++i) {
        if (mp[i] == 0) continue;
        Scalar c(vars, mp[i]);
        for (int part : parts[i].parts()) c *= twist.adams(part);
        // p_{parts[i]} back to m
        const auto& row = tables::to_monomial(Basis::p, parts[i]);
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) out[j] += c * Scalar(vars, row[j]);
        }
    }
    return out;
}

// Solve the axiom system for all lambda of degree n at once; returns m-basis
// coefficient vectors indexed like tables::partitions_of(n).
std::vector<std::vector<Scalar>> solve_degree(int n) {
    VarSetPtr vars = VarSet::core();
    Scalar q = Scalar::variable(vars, "q"), t = Scalar::variable(vars, "t"), one(vars, 1);
    const auto& parts = tables::partitions_of(n);
    size_t P = parts.size();

    // column mu of the twist matrices: m_mu[(t-1)X], m_mu[(q-1)X] in m-coords
    std::vector<std::vector<Scalar>> At(P), Aq(P);
    for (size_t mu = 0; mu < P; ++mu) {
        At[mu] = twisted_monomial(parts[mu], t - one);
        Aq[mu] = twisted_monomial(parts[mu], q - one);
    }

    std::vector<std::vector<Scalar>> result(P);
    for (size_t li = 0; li < P; ++li) {
        const Partition& la = parts[li];
        Partition lac = la.conjugate();

        // rows: triangularity constraints and the normalization
        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhs;
        for (size_t nu = 0; nu < P; ++nu) {
            bool keep_t = dominance_leq(parts[nu], la);
            bool keep_q = dominance_leq(parts[nu], lac);
            if (!keep_t) {
                std::vector<Scalar> row(P, Scalar(vars));
                for (size_t mu = 0; mu < P; ++mu) row[mu] = At[mu][nu];
                rows.push_back(std::move(row));
                rhs.push_back(Scalar(vars));
            }
            if (!keep_q) {
                std::vector<Scalar> row(P, Scalar(vars));
                for (size_t mu = 0; mu < P; ++mu) row[mu] = Aq[mu][nu];
                rows.push_back(std::move(row));
                rhs.push_back(Scalar(vars));
            }
        }
        {
            std::vector<Scalar> row(P, Scalar(vars));
            row[0] = one; // coefficient of m_(n), first in canonical order
            rows.push_back(std::move(row));
            rhs.push_back(one);
        }

        // Fraction-free Gaussian elimination: the system entries are
        // polynomials and single-step Bareiss keeps every intermediate
        // polynomial, with divisions that are exact by the minor identity.
        size_t R = rows.size();
        std::vector<std::vector<MultiPoly>> a(R, std::vector<MultiPoly>(P + 1));
        auto as_poly = [](const Scalar& s) {
            if (!s.den().is_constant()) throw SingularSystem("axiom row is not polynomial");
            return s.num();
        };
        for (size_t r = 0; r < R; ++r) {
            for (size_t j = 0; j < P; ++j) a[r][j] = as_poly(rows[r][j]);
            a[r][P] = as_poly(rhs[r]);
        }
        MultiPoly prev = MultiPoly::constant(vars, 1);
        std::vector<size_t> pivot_col;
        size_t rank = 0;
        for (size_t c = 0; c <= P && rank < R; ++c) {
            if (c == P) break;
            size_t piv = rank;
            while (piv < R && a[piv][c].is_zero()) ++piv;
            if (piv == R) continue;
            std::swap(a[piv], a[rank]);
            const MultiPoly pivot = a[rank][c];
            for (size_t r = rank + 1; r < R; ++r) {
                MultiPoly factor = a[r][c];
                for (size_t j = c; j <= P; ++j) {
                    a[r][j] = exact_divide(pivot * a[r][j] - factor * a[rank][j], prev);
                }
            }
            prev = pivot;
            pivot_col.push_back(c);
            ++rank;
        }
        if (rank < P)
            throw SingularSystem("axiom system is underdetermined for " + std::to_string(n));
        for (size_t r = rank; r < R; ++r) {
            if (!a[r][P].is_zero()) throw SingularSystem("axiom system is inconsistent");
        }
        // back substitution over the fraction field, reduced per coefficient
        std::vector<Scalar> coeffs(P, Scalar(vars));
        for (size_t k = rank; k-- > 0;) {
            size_t c = pivot_col[k];
            Scalar acc(a[k][P]);
            for (size_t j = c + 1; j < P; ++j) {
                if (!a[k][j].is_zero()) acc -= Scalar(a[k][j]) * coeffs[j];
            }
            coeffs[c] = acc / Scalar(a[k][c]);
        }
        result[li] = std::move(coeffs);
    }
    return result;
}

} // namespace

const SymFunc& macdonald_htilde(const Partition& lambda) {
    static std::map<std::vector<int>, SymFunc> cache;
    auto it = cache.find(lambda.parts());
    if (it != cache.end()) return it->second;

    int n = lambda.size();
    auto solved = solve_degree(n);
    VarSetPtr vars = VarSet::core();
    const auto& parts = tables::partitions_of(n);
    const SymFunc* out = nullptr;
    for (size_t li = 0; li < parts.size(); ++li) {
        SymFunc f(vars, Basis::m);
        for (size_t mu = 0; mu < parts.size(); ++mu) f.add_term(parts[mu], solved[li][mu].reduced());
        auto [jt, fresh] = cache.emplace(parts[li].parts(), std::move(f));
        (void)fresh;
        if (parts[li] == lambda) out = &jt->second;
    }
    return *out;
}

SymFunc hall_littlewood(const Partition& lambda) {
    const SymFunc& h = macdonald_htilde(lambda);
    Scalar zero_t(h.vars(), 0);
    std::map<std::string, Scalar> at0{{"t", zero_t}};
    return h.map_coefficients([&](const Scalar& c) { return c.substitute(at0).reduced(); });
}

Scalar flag_count_poly(const Partition& lambda, const std::vector<int>& mu) {
    int total = 0;
    for (int x : mu) total += x;
    if (total != lambda.size()) throw SizeMismatch("flag type must have the same size");
    return hall_littlewood(lambda).coefficient(sort_to_partition(mu));
}

MacdonaldAxiomReport verify_macdonald_axioms(const Partition& lambda) {
    MacdonaldAxiomReport rep;
    const SymFunc& H = macdonald_htilde(lambda);
    const VarSetPtr& vars = H.vars();
    Scalar q = Scalar::variable(vars, "q"), t = Scalar::variable(vars, "t"), one(vars, 1);
    AlphabetExpr X = AlphabetExpr::alphabet(0);

    auto supported_below = [&](const SymFunc& f, const Partition& bound) {
        for (auto& [mu, c] : f.terms()) {
            if (!dominance_leq(mu, bound)) return false;
        }
        return true;
    };
    rep.triangular_t = supported_below(plethysm1(H, AlphabetExpr::scalar(t - one) * X), lambda);
    rep.triangular_q =
        supported_below(plethysm1(H, AlphabetExpr::scalar(q - one) * X), lambda.conjugate());
    rep.normalized = plethysm_scalar(H, one) == one;

    rep.orthogonal = true;
    for (const Partition& mu : tables::partitions_of(lambda.size())) {
        if (mu == lambda) continue;
        if (!qt_pair(H, macdonald_htilde(mu)).is_zero()) rep.orthogonal = false;
    }
    rep.norm_matches = qt_pair(H, H) == z_qt(lambda, vars);

    // t -> q^{-1} against the Jacobi-Trudi Schur function
    std::map<std::string, Scalar> tq{{"t", q.inverse()}};
    SymFunc lhs = H.map_coefficients([&](const Scalar& c) { return c.substitute(tq); });
    SymFunc schur = SymFunc::element(vars, Basis::s, lambda);
    AlphabetExpr geom = AlphabetExpr::scalar(one / (one - q));
    SymFunc rhs = plethysm1(schur, X * geom);
    Scalar denom = plethysm_scalar(schur, one / (one - q));
    rep.schur_specializes = lhs * denom == rhs;

    return rep;
}

} // namespace hlv
