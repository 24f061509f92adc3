#include "hlv/oracle.hpp"

#include <algorithm>
#include <set>

#include "hlv/macdonald.hpp"

namespace hlv {

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

int mod_inv(int a, int p) {
    int r = 1;
    a %= p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b, int p) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat r(n, Vec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = (r[i][j] + a[i][l] * b[l][j]) % p;
        }
    return r;
}

int mat_rank(Mat a, int p) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        int inv = mod_inv(a[rank][c], p);
        for (int j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            int f = a[r][c];
            for (int j = c; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

Mat mat_inverse(Mat a, int p) {
    int n = static_cast<int>(a.size());
    Mat inv(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("matrix not invertible");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        int d = mod_inv(a[c][c], p);
        for (int j = 0; j < n; ++j) {
            a[c][j] = a[c][j] * d % p;
            inv[c][j] = inv[c][j] * d % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            int f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
                inv[r][j] = ((inv[r][j] - f * inv[c][j]) % p + p) % p;
            }
        }
    }
    return inv;
}

// Invertibility test without allocations; n <= 6.
bool is_invertible_small(const Mat& g, int p) {
    int n = static_cast<int>(g.size());
    int a[6][6];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g[i][j];
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != c)
            for (int j = c; j < n; ++j) std::swap(a[piv][j], a[c][j]);
        int inv = mod_inv(a[c][c], p);
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            int f = a[r][c] * inv % p;
            for (int j = c; j < n; ++j) a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
        }
    }
    return true;
}

// --- polynomial matrices over F_p, for ranks over the function field -------

using Poly = std::vector<int>; // coefficient list, low degree first

Poly poly_mul_fp(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Poly poly_sub_fp(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((x % p) + p) % p;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

using PolyMat = std::vector<std::vector<Poly>>;

Poly poly_add_fp(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b, int p) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    PolyMat r(n, std::vector<Poly>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].empty()) continue;
            for (size_t j = 0; j < m; ++j) {
                r[i][j] = poly_add_fp(r[i][j], poly_mul_fp(a[i][l], b[l][j], p), p);
            }
        }
    return r;
}

// Rank over F_p(x) by fraction-free elimination (entries stay polynomial).
int poly_mat_rank(PolyMat a, int p) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][c].empty()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c].empty()) continue;
            Poly f = a[r][c], g = a[rank][c];
            for (int j = c; j < cols; ++j) {
                a[r][j] = poly_sub_fp(poly_mul_fp(g, a[r][j], p), poly_mul_fp(f, a[rank][j], p), p);
            }
        }
        ++rank;
    }
    return rank;
}

Partition poly_nilpotent_type(const PolyMat& mat, int p) {
    int n = static_cast<int>(mat.size());
    std::vector<int> type;
    PolyMat acc = mat;
    int prev = 0;
    for (int i = 1; i <= n && prev < n; ++i) {
        int kernel = n - poly_mat_rank(acc, p);
        type.push_back(kernel - prev);
        prev = kernel;
        acc = poly_mat_mul(acc, mat, p);
    }
    while (!type.empty() && type.back() == 0) type.pop_back();
    if (prev < n) throw Error("matrix is not nilpotent");
    return Partition(std::move(type));
}

// Standard nilpotent of type lambda, matching the block convention used by
// the series-ring module: the (i, i+1) block is [Id; 0].
Mat standard_nilpotent_fp(const Partition& la) {
    int n = la.size();
    Mat m(n, Vec(n, 0));
    int off = 0;
    const auto& parts = la.parts();
    for (size_t b = 0; b + 1 < parts.size(); ++b) {
        for (int j = 0; j < parts[b + 1]; ++j) m[off + j][off + parts[b] + j] = 1;
        off += parts[b];
    }
    return m;
}

} // namespace

Partition fp_nilpotent_type(const Mat& mat, int p) {
    int n = static_cast<int>(mat.size());
    std::vector<int> type;
    Mat acc = mat;
    int prev = 0;
    for (int i = 1; i <= n && prev < n; ++i) {
        int kernel = n - mat_rank(acc, p);
        type.push_back(kernel - prev);
        prev = kernel;
        acc = mat_mul(acc, mat, p);
    }
    while (!type.empty() && type.back() == 0) type.pop_back();
    if (prev < n) throw Error("matrix is not nilpotent");
    return Partition(std::move(type));
}

namespace {

// --- subspaces -------------------------------------------------------------
// A subspace is its RREF basis (rows), canonical per subspace.

Mat rref(Mat rows, int p) {
    int rank = mat_rank(rows, p); // mat_rank also row-reduces a copy; redo properly
    (void)rank;
    int rcount = static_cast<int>(rows.size());
    int cols = rcount ? static_cast<int>(rows[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rcount; ++c) {
        int piv = -1;
        for (int i = r; i < rcount; ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        int inv = mod_inv(rows[r][c], p);
        for (int j = 0; j < cols; ++j) rows[r][j] = rows[r][j] * inv % p;
        for (int i = 0; i < rcount; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool in_span(const Mat& rref_rows, Vec v, int p) {
    int cols = static_cast<int>(v.size());
    for (const Vec& row : rref_rows) {
        int lead = 0;
        while (lead < cols && row[lead] == 0) ++lead;
        if (lead < cols && v[lead] != 0) {
            int f = v[lead]; // row has leading 1
            for (int j = 0; j < cols; ++j) v[j] = ((v[j] - f * row[j]) % p + p) % p;
        }
    }
    for (int x : v)
        if (x != 0) return false;
    return true;
}

std::vector<Vec> all_vectors(int n, int p) {
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// N-invariance of the row space: N * v in span for every basis row v (vectors
// treated as columns for the action).
bool invariant_under(const Mat& n_mat, const Mat& rows, int p) {
    int n = static_cast<int>(n_mat.size());
    for (const Vec& row : rows) {
        Vec image(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) image[i] = (image[i] + n_mat[i][j] * row[j]) % p;
        }
        if (!in_span(rows, image, p)) return false;
    }
    return true;
}

// All subspaces of dimension dim(base) + extra containing base.
std::vector<Mat> superspaces(const Mat& base, int extra, int n, int p) {
    std::set<Mat> frontier{base};
    const auto vectors = all_vectors(n, p);
    for (int step = 0; step < extra; ++step) {
        std::set<Mat> next;
        for (const Mat& space : frontier) {
            for (const Vec& v : vectors) {
                if (in_span(space, v, p)) continue;
                Mat bigger = space;
                bigger.push_back(v);
                next.insert(rref(std::move(bigger), p));
            }
        }
        frontier = std::move(next);
    }
    return {frontier.begin(), frontier.end()};
}

long long count_flags(const Mat& n_mat, const Mat& current, const std::vector<int>& mu, size_t idx,
                      int n, int p) {
    if (idx == mu.size()) return 1;
    long long total = 0;
    for (const Mat& next : superspaces(current, mu[idx], n, p)) {
        if (!invariant_under(n_mat, next, p)) continue;
        total += count_flags(n_mat, next, mu, idx + 1, n, p);
    }
    return total;
}

void check_prime(int p) {
    if (p != 2 && p != 3) throw TooLarge("oracle primes are 2 and 3");
}

} // namespace

long long flag_count_bruteforce(const Partition& lambda, const std::vector<int>& mu, int p) {
    check_prime(p);
    int n = lambda.size();
    if (n > 4) throw TooLarge("flag enumeration capped at n = 4");
    int total = 0;
    for (int x : mu) {
        if (x <= 0) throw Error("flag type entries must be positive");
        total += x;
    }
    if (total != n) throw SizeMismatch("flag type must sum to |lambda|");
    static std::map<std::tuple<std::vector<int>, std::vector<int>, int>, long long> cache;
    auto key = std::make_tuple(lambda.parts(), mu, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Mat n_mat = standard_nilpotent_fp(lambda);
    long long count = count_flags(n_mat, Mat{}, mu, 0, n, p);
    cache.emplace(std::move(key), count);
    return count;
}

long long centralizer_order(const Partition& lambda, int p) {
    check_prime(p);
    int n = lambda.size();
    if (n > 4) throw TooLarge("centralizer enumeration capped at n = 4");
    static std::map<std::pair<std::vector<int>, int>, long long> cache;
    auto key = std::make_pair(lambda.parts(), p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (n == 0) {
        cache.emplace(key, 1);
        return 1;
    }
    Mat N = standard_nilpotent_fp(lambda);
    // commutation gN = Ng is linear in g: solve it, then count the invertible
    // solutions by walking the solution space.
    int vars = n * n;
    Mat sys; // rows: one equation per matrix position
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec row(vars, 0);
            // (gN)_{ij} - (Ng)_{ij} = sum_k g_{ik} N_{kj} - N_{ik} g_{kj}
            for (int k = 0; k < n; ++k) {
                row[i * n + k] = (row[i * n + k] + N[k][j]) % p;
                row[k * n + j] = ((row[k * n + j] - N[i][k]) % p + p) % p;
            }
            sys.push_back(std::move(row));
        }
    }
    // kernel basis of sys
    Mat reduced = rref(std::move(sys), p);
    std::vector<int> lead_cols;
    for (const Vec& row : reduced) {
        int c = 0;
        while (c < vars && row[c] == 0) ++c;
        lead_cols.push_back(c);
    }
    std::vector<int> free_cols;
    for (int c = 0; c < vars; ++c) {
        if (std::find(lead_cols.begin(), lead_cols.end(), c) == lead_cols.end()) free_cols.push_back(c);
    }
    Mat kernel;
    for (int fc : free_cols) {
        Vec sol(vars, 0);
        sol[fc] = 1;
        for (size_t r = 0; r < reduced.size(); ++r) {
            if (lead_cols[r] < vars) sol[lead_cols[r]] = ((-reduced[r][fc]) % p + p) % p;
        }
        kernel.push_back(std::move(sol));
    }

    long long count = 0;
    size_t k = kernel.size();
    std::vector<int> sel(k, 0);
    Mat g(n, Vec(n, 0));
    // walk the solution space with incremental updates: each odometer digit
    // bump adds one kernel basis vector (p bumps cancel mod p)
    auto add_basis = [&](size_t b) {
        for (int idx = 0; idx < vars; ++idx) {
            if (kernel[b][idx]) g[idx / n][idx % n] = (g[idx / n][idx % n] + kernel[b][idx]) % p;
        }
    };
    while (true) {
        if (is_invertible_small(g, p)) ++count;
        size_t i = 0;
        while (i < k) {
            add_basis(i);
            if (++sel[i] == p) {
                sel[i] = 0;
                ++i;
            } else {
                break;
            }
        }
        if (i == k) break;
    }
    cache.emplace(key, count);
    return count;
}

std::vector<Rat> nilpotent_mass_series(int nmax, int p) {
    if (nmax > 4) throw TooLarge("mass series capped at T^4");
    std::vector<Rat> out(nmax + 1, 0);
    for (int n = 0; n <= nmax; ++n) {
        for (const Partition& la : enumerate_partitions(n)) {
            out[n] += Rat(1) / to_rat(centralizer_order(la, p));
        }
    }
    return out;
}

long long grassmannian_count(int n, int d, int p) {
    check_prime(p);
    if (n > 3 || d > 4) throw TooLarge("lattice count capped at n = 3, d = 4");
    // diagonal x^{m_1}..x^{m_n}, sum m_i = d; entries below the diagonal in
    // row i range over F_p[x] / x^{m_i}
    std::vector<int> m(n, 0);
    long long total = 0;
    // iterate over compositions of d into n parts
    std::vector<int> comp(n, 0);
    comp[0] = d;
    while (true) {
        int free_coeffs = 0;
        for (int i = 0; i < n; ++i) free_coeffs += i * comp[i]; // i entries below diagonal in row i
        // walk every choice of the free coefficients
        long long block = 0;
        std::vector<int> odo(free_coeffs, 0);
        while (true) {
            ++block;
            int i = 0;
            while (i < free_coeffs && ++odo[i] == p) odo[i++] = 0;
            if (i == free_coeffs) break;
        }
        total += block;
        // next composition
        int i = 0;
        while (i < n - 1 && comp[i] == 0) ++i;
        if (i == n - 1) break;
        int v = comp[i];
        comp[i] = 0;
        comp[0] = v - 1;
        comp[i + 1] += 1;
    }
    return total;
}

HallVector hall_product_bruteforce(const Partition& lambda, const Partition& nu, int p) {
    check_prime(p);
    int m = lambda.size() + nu.size();
    if (m > 4) throw TooLarge("subobject enumeration capped at n = 4");
    if (m == 0) return HallVector{{Partition{}, Rat(1)}};
    HallVector out;
    long long aut_la = centralizer_order(lambda, p);
    long long aut_nu = centralizer_order(nu, p);
    for (const Partition& mu : enumerate_partitions(m)) {
        Mat theta = standard_nilpotent_fp(mu);
        long long stable = 0;
        for (const Mat& w : superspaces(Mat{}, nu.size(), m, p)) {
            if (!invariant_under(theta, w, p)) continue;
            // basis adapted to w: columns = basis of w, then a completion
            Mat cols; // collect as column vectors
            for (const Vec& row : w) cols.push_back(row);
            Mat id(m, Vec(m, 0));
            for (int i = 0; i < m; ++i) id[i][i] = 1;
            for (int i = 0; i < m && static_cast<int>(cols.size()) < m; ++i) {
                Mat trial = cols;
                trial.push_back(id[i]);
                if (mat_rank(trial, p) == static_cast<int>(trial.size())) cols = std::move(trial);
            }
            // change of basis: C has the chosen vectors as columns
            Mat C(m, Vec(m, 0));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) C[i][j] = cols[j][i];
            Mat conj = mat_mul(mat_mul(mat_inverse(C, p), theta, p), C, p);
            int k = nu.size();
            Mat sub(k, Vec(k, 0)), quot(m - k, Vec(m - k, 0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = conj[i][j];
            for (int i = k; i < m; ++i)
                for (int j = k; j < m; ++j) quot[i - k][j - k] = conj[i][j];
            if (k > 0 && fp_nilpotent_type(sub, p) != nu) continue;
            if (m - k > 0 && fp_nilpotent_type(quot, p) != lambda) continue;
            ++stable;
        }
        if (stable == 0) continue;
        Rat coeff = to_rat(stable) * to_rat(aut_la) * to_rat(aut_nu) / to_rat(centralizer_order(mu, p));
        out.emplace(mu, coeff);
    }
    return out;
}

SymFunc I_map(const HallVector& v, int p) {
    VarSetPtr vars = VarSet::core();
    SymFunc out(vars, Basis::m);
    for (auto& [la, c] : v) {
        if (la.size() > 4) throw TooLarge("I map capped at n = 4");
        for (const Partition& mu : tables::partitions_of(la.size())) {
            long long flags = flag_count_bruteforce(la, mu.parts(), p);
            if (flags != 0) out.add_term(mu, Scalar(vars, c * to_rat(flags)));
        }
    }
    return out;
}

namespace {

// Enumeration of block-upper-triangular nilpotent matrices with given block
// sizes and per-block polynomial degree bounds deg(i,j); the diagonal blocks
// are constant nilpotent. Used for both the two-point count (degree bounds 0)
// and the one-point bundle count (degree bounds d_j - d_i).

struct BlockShape {
    std::vector<int> sizes;          // block sizes
    std::vector<int> offsets;        // prefix sums
    int n = 0;
};

BlockShape make_shape(const std::vector<int>& sizes) {
    BlockShape s;
    s.sizes = sizes;
    s.offsets.assign(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) s.offsets[i + 1] = s.offsets[i] + sizes[i];
    s.n = s.offsets.back();
    return s;
}

std::vector<Mat> all_nilpotent(int n, int p) {
    std::vector<Mat> out;
    if (n == 0) return {Mat{}};
    std::vector<int> odo(n * n, 0);
    while (true) {
        Mat m(n, Vec(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = odo[i * n + j];
        Mat acc = m;
        for (int i = 1; i < n; ++i) acc = mat_mul(acc, m, p);
        bool nil = true;
        for (int i = 0; i < n && nil; ++i)
            for (int j = 0; j < n && nil; ++j)
                if (acc[i][j] != 0) nil = false;
        if (nil) out.push_back(std::move(m));
        int i = 0;
        while (i < n * n && ++odo[i] == p) odo[i++] = 0;
        if (i == n * n) break;
    }
    return out;
}

long long gl_order(int n, int p) {
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    long long total = 1, pi = 1;
    for (int i = 0; i < n; ++i) {
        total *= (q - pi);
        pi *= p;
    }
    return total;
}

} // namespace

TensorSym p1_two_point_Cmu(const std::vector<int>& mu, int p) {
    if (p != 2) throw TooLarge("two-point count is run at p = 2");
    int n = 0;
    for (int x : mu) n += x;
    if (n > 3) throw TooLarge("two-point count capped at size 3");
    VarSetPtr vars = VarSet::core();
    BlockShape shape = make_shape(mu);
    int m = static_cast<int>(mu.size());

    // diagonal block choices, shared by A and B
    std::vector<std::vector<Mat>> diag_choices;
    for (int i = 0; i < m; ++i) diag_choices.push_back(all_nilpotent(mu[i], p));

    // strict upper entries of A and B are free
    std::vector<std::pair<int, int>> upper_cells;
    for (int bi = 0; bi < m; ++bi)
        for (int bj = bi + 1; bj < m; ++bj)
            for (int i = 0; i < mu[bi]; ++i)
                for (int j = 0; j < mu[bj]; ++j)
                    upper_cells.emplace_back(shape.offsets[bi] + i, shape.offsets[bj] + j);
    size_t ncells = upper_cells.size();

    // H_nu[X; p] for all nu of size n, with q specialized to p
    std::map<std::vector<int>, SymFunc> hl;
    Scalar qp(vars, Rat(p));
    std::map<std::string, Scalar> at_q{{"q", qp}};
    for (const Partition& nu : tables::partitions_of(n)) {
        hl.emplace(nu.parts(), hall_littlewood(nu).map_coefficients(
                                   [&](const Scalar& c) { return c.substitute(at_q); }));
    }

    TensorSym total(2, vars, Basis::m);
    std::vector<size_t> diag_sel(m, 0);
    while (true) {
        Mat base(shape.n, Vec(shape.n, 0));
        for (int b = 0; b < m; ++b) {
            const Mat& d = diag_choices[b][diag_sel[b]];
            for (int i = 0; i < mu[b]; ++i)
                for (int j = 0; j < mu[b]; ++j) base[shape.offsets[b] + i][shape.offsets[b] + j] = d[i][j];
        }
        // walk the upper parts of A and B together
        std::vector<int> odo(2 * ncells, 0);
        while (true) {
            Mat A = base, B = base;
            for (size_t c = 0; c < ncells; ++c) {
                A[upper_cells[c].first][upper_cells[c].second] = odo[c];
                B[upper_cells[c].first][upper_cells[c].second] = odo[ncells + c];
            }
            Partition ta = fp_nilpotent_type(A, p);
            Partition tb = fp_nilpotent_type(B, p);
            const SymFunc& ha = hl.at(ta.parts());
            const SymFunc& hb = hl.at(tb.parts());
            for (auto& [laa, ca] : ha.terms())
                for (auto& [lab, cb] : hb.terms()) total.add_term({laa, lab}, ca * cb);
            size_t i = 0;
            while (i < 2 * ncells && ++odo[i] == p) odo[i++] = 0;
            if (i == 2 * ncells) break;
        }
        int b = 0;
        while (b < m && ++diag_sel[b] == diag_choices[b].size()) diag_sel[b++] = 0;
        if (b == m) break;
    }

    Rat denom = 1;
    for (int i = 0; i < m; ++i) denom *= to_rat(gl_order(mu[i], p));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            long long f = 1;
            for (int e = 0; e < 2 * mu[i] * mu[j]; ++e) f *= p;
            denom *= to_rat(f);
        }
    return total * Scalar(vars, Rat(1) / denom);
}

std::map<std::pair<int, int>, TensorSym> p1_two_point_assembled(int nmax, int tmax, int p) {
    VarSetPtr vars = VarSet::core();
    std::map<std::pair<int, int>, TensorSym> out;
    for (int n = 0; n <= nmax; ++n) {
        for (int j = 0; j <= tmax; ++j) out.emplace(std::make_pair(n, j), TensorSym(2, vars, Basis::m));
    }
    out.at({0, 0}) += TensorSym::one(2, vars, Basis::m);
    // splitting types: distinct degrees 0 <= d_1 < d_2 < ... with
    // multiplicities mu_i > 0, total rank <= nmax, t-weight <= tmax
    struct Item {
        std::vector<int> degs, mults;
    };
    std::vector<Item> stack{{{}, {}}};
    while (!stack.empty()) {
        Item cur = stack.back();
        stack.pop_back();
        int rank = 0, weight = 0;
        for (size_t i = 0; i < cur.degs.size(); ++i) {
            rank += cur.mults[i];
            weight += cur.degs[i] * cur.mults[i];
        }
        if (!cur.degs.empty()) {
            TensorSym c = p1_two_point_Cmu(cur.mults, p);
            out.at({rank, weight}) += c;
        }
        int dmin = cur.degs.empty() ? 0 : cur.degs.back() + 1;
        for (int d = dmin; d <= tmax; ++d) {
            for (int mult = 1; rank + mult <= nmax; ++mult) {
                if (weight + d * mult > tmax) break;
                Item next = cur;
                next.degs.push_back(d);
                next.mults.push_back(mult);
                stack.push_back(next);
            }
        }
    }
    return out;
}

std::vector<SymFunc> p1_parabolic_omega(const Partition& lambda, int p, int dmax) {
    if (p != 2) throw TooLarge("bundle count is run at p = 2");
    int n = lambda.size();
    if (n > 2 || dmax > 3) throw TooLarge("bundle count capped at rank 2, t^3");
    VarSetPtr vars = VarSet::core();
    Scalar qp(vars, Rat(p));
    std::map<std::string, Scalar> at_q{{"q", qp}};
    std::map<std::vector<int>, SymFunc> hl;
    for (const Partition& nu : tables::partitions_of(n)) {
        hl.emplace(nu.parts(), hall_littlewood(nu).map_coefficients(
                                   [&](const Scalar& c) { return c.substitute(at_q); }));
    }
    std::vector<SymFunc> out(dmax + 1, SymFunc(vars, Basis::m));

    // splitting types: 0 <= d_1 < ... < d_m, multiplicities mu_i, sum mu_i = n
    struct Split {
        std::vector<int> degs, mults;
    };
    std::vector<Split> splits;
    std::vector<Split> stack{{{}, {}}};
    while (!stack.empty()) {
        Split cur = stack.back();
        stack.pop_back();
        int rank = 0, weight = 0;
        for (size_t i = 0; i < cur.degs.size(); ++i) {
            rank += cur.mults[i];
            weight += cur.degs[i] * cur.mults[i];
        }
        if (rank == n && weight <= dmax) splits.push_back(cur);
        if (rank >= n) continue;
        int dmin = cur.degs.empty() ? 0 : cur.degs.back() + 1;
        for (int d = dmin; d <= dmax; ++d) {
            for (int mult = 1; rank + mult <= n; ++mult) {
                if (weight + d * mult > dmax) break;
                Split next = cur;
                next.degs.push_back(d);
                next.mults.push_back(mult);
                stack.push_back(next);
            }
        }
    }

    for (const Split& sp : splits) {
        int m = static_cast<int>(sp.mults.size());
        BlockShape shape = make_shape(sp.mults);
        int weight = 0;
        for (int i = 0; i < m; ++i) weight += sp.degs[i] * sp.mults[i];

        // |Aut| by enumeration: block upper triangular, diagonal blocks
        // invertible constant, block (i,j) polynomial of degree <= d_j - d_i
        std::vector<std::tuple<int, int, int>> cells; // (row, col, #coeffs)
        for (int bi = 0; bi < m; ++bi)
            for (int bj = bi; bj < m; ++bj)
                for (int i = 0; i < sp.mults[bi]; ++i)
                    for (int j = 0; j < sp.mults[bj]; ++j) {
                        int deg = sp.degs[bj] - sp.degs[bi];
                        cells.emplace_back(shape.offsets[bi] + i, shape.offsets[bj] + j,
                                           bi == bj ? 1 : deg + 1);
                    }
        long long aut = 0;
        {
            int total_coeffs = 0;
            for (auto& [r, c, k] : cells) total_coeffs += k;
            std::vector<int> odo(total_coeffs, 0);
            while (true) {
                Mat g0(shape.n, Vec(shape.n, 0));
                int pos = 0;
                for (auto& [r, c, k] : cells) {
                    g0[r][c] = odo[pos]; // constant term decides invertibility
                    pos += k;
                }
                if (mat_rank(g0, p) == shape.n) ++aut;
                int i = 0;
                while (i < total_coeffs && ++odo[i] == p) odo[i++] = 0;
                if (i == total_coeffs) break;
            }
        }

        // endomorphisms: same shape but diagonal blocks nilpotent; collect by
        // global type and constant-term type
        std::vector<std::tuple<int, int, int>> ecells;
        for (int bi = 0; bi < m; ++bi)
            for (int bj = bi + 1; bj < m; ++bj)
                for (int i = 0; i < sp.mults[bi]; ++i)
                    for (int j = 0; j < sp.mults[bj]; ++j)
                        ecells.emplace_back(shape.offsets[bi] + i, shape.offsets[bj] + j,
                                            sp.degs[bj] - sp.degs[bi] + 1);
        std::vector<std::vector<Mat>> diag_choices;
        for (int i = 0; i < m; ++i) diag_choices.push_back(all_nilpotent(sp.mults[i], p));

        int total_coeffs = 0;
        for (auto& [r, c, k] : ecells) total_coeffs += k;
        std::vector<size_t> diag_sel(m, 0);
        while (true) {
            // polynomial entries as coefficient vectors
            std::vector<int> odo(total_coeffs, 0);
            while (true) {
                // global type via rank over F_p(x); constant type at x = 0
                auto trimmed = [](std::vector<int> v) {
                    while (!v.empty() && v.back() == 0) v.pop_back();
                    return v;
                };
                std::vector<std::vector<std::vector<int>>> poly(
                    shape.n, std::vector<std::vector<int>>(shape.n, std::vector<int>{}));
                for (int b = 0; b < m; ++b) {
                    const Mat& d = diag_choices[b][diag_sel[b]];
                    for (int i = 0; i < sp.mults[b]; ++i)
                        for (int j = 0; j < sp.mults[b]; ++j)
                            poly[shape.offsets[b] + i][shape.offsets[b] + j] =
                                trimmed({d[i][j]});
                }
                int pos = 0;
                for (auto& [r, c, k] : ecells) {
                    poly[r][c] = trimmed(std::vector<int>(odo.begin() + pos, odo.begin() + pos + k));
                    pos += k;
                }
                Partition global = poly_nilpotent_type(poly, p);
                if (global == lambda) {
                    Mat c0(shape.n, Vec(shape.n, 0));
                    for (int i = 0; i < shape.n; ++i)
                        for (int j = 0; j < shape.n; ++j)
                            c0[i][j] = poly[i][j].empty() ? 0 : poly[i][j][0];
                    Partition t0 = fp_nilpotent_type(c0, p);
                    out[weight] += hl.at(t0.parts()) * Scalar(vars, Rat(1) / to_rat(aut));
                }
                int i = 0;
                while (i < total_coeffs && ++odo[i] == p) odo[i++] = 0;
                if (i == total_coeffs) break;
            }
            int b = 0;
            while (b < m && ++diag_sel[b] == diag_choices[b].size()) diag_sel[b++] = 0;
            if (b == m) break;
        }
    }
    return out;
}

} // namespace hlv
