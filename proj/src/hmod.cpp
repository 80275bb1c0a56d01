#include "bruhat/hmod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bruhat {

std::string HModule::json() const {
    std::string out = "{\"n\":" + std::to_string(n) + ",\"dim\":" + std::to_string(dim) +
                      ",\"actions\":[";
    for (std::size_t a = 0; a < act.size(); ++a) {
        if (a) out += ",";
        out += "[";
        for (int i = 0; i < dim; ++i) {
            if (i) out += ",";
            out += "[";
            for (int j = 0; j < dim; ++j) {
                if (j) out += ",";
                out += "\"" + act[a].at(i, j).get_str() + "\"";
            }
            out += "]";
        }
        out += "]";
    }
    out += "],\"labels\":[";
    if (labels) {
        for (std::size_t i = 0; i < labels->size(); ++i) {
            if (i) out += ",";
            out += "\"" + (*labels)[i].str() + "\"";
        }
    }
    out += "]}";
    return out;
}

HModule zero_module(int n) {
    HModule m;
    m.n = n;
    m.dim = 0;
    m.act.assign(std::max(n - 1, 0), RatMat(0, 0));
    m.monomial = true;
    m.labels = std::vector<Perm>{};
    return m;
}

HModule direct_sum(const HModule& a, const HModule& b) {
    if (a.n != b.n) throw std::invalid_argument("direct_sum: size mismatch");
    HModule m;
    m.n = a.n;
    m.dim = a.dim + b.dim;
    for (int i = 1; i < a.n; ++i)
        m.act.push_back(RatMat::direct_sum(a.action(i), b.action(i)));
    m.monomial = a.monomial && b.monomial;
    if (a.labels && b.labels) {
        std::vector<Perm> lab = *a.labels;
        lab.insert(lab.end(), b.labels->begin(), b.labels->end());
        m.labels = std::move(lab);
    }
    return m;
}

bool check_relations(const HModule& m) {
    for (int i = 1; i < m.n; ++i) {
        const RatMat& a = m.action(i);
        if (a.rows() != m.dim || a.cols() != m.dim) return false;
        if (a * a != a) return false;
    }
    for (int i = 1; i + 1 < m.n; ++i) {
        const RatMat& a = m.action(i);
        const RatMat& b = m.action(i + 1);
        if (a * (b * a) != b * (a * b)) return false;
    }
    for (int i = 1; i < m.n; ++i)
        for (int j = i + 2; j < m.n; ++j) {
            if (m.action(i) * m.action(j) != m.action(j) * m.action(i)) return false;
        }
    return true;
}

bool matrices_monomial(const HModule& m) {
    for (int i = 1; i < m.n; ++i) {
        const RatMat& a = m.action(i);
        for (int u = 0; u < m.dim; ++u) {
            int nz = 0;
            for (int v = 0; v < m.dim; ++v) {
                const Rat& x = a.at(v, u);
                if (x == 0) continue;
                if (x != 1) return false;
                ++nz;
            }
            if (nz > 1) return false;
        }
    }
    return true;
}

bool intertwines(const HModule& src, const HModule& tgt, const RatMat& f) {
    if (src.n != tgt.n) return false;
    for (int i = 1; i < src.n; ++i)
        if (f * src.action(i) != tgt.action(i) * f) return false;
    return true;
}

bool ModuleMap::verify() const { return intertwines(source, target, matrix); }

bool ModuleMap::is_isomorphism() const {
    return verify() && matrix.rows() == matrix.cols() && matrix.invertible();
}

namespace {

// Solve F * A_i = B_i * F over all listed generator pairs.
std::vector<RatMat> solve_intertwiners(const std::vector<const RatMat*>& src,
                                       const std::vector<const RatMat*>& tgt,
                                       int dim_src, int dim_tgt) {
    const int unknowns = dim_src * dim_tgt;
    const int block = dim_tgt * dim_src;
    RatMat sys(static_cast<int>(src.size()) * block, unknowns);
    int row = 0;
    for (std::size_t g = 0; g < src.size(); ++g) {
        const RatMat& a = *src[g];
        const RatMat& b = *tgt[g];
        // entry (r, c): sum_k F[r,k] a[k,c] - sum_k b[r,k] F[k,c] = 0
        for (int r = 0; r < dim_tgt; ++r)
            for (int c = 0; c < dim_src; ++c) {
                for (int k = 0; k < dim_src; ++k)
                    if (a.at(k, c) != 0) sys.at(row, r * dim_src + k) += a.at(k, c);
                for (int k = 0; k < dim_tgt; ++k)
                    if (b.at(r, k) != 0) sys.at(row, k * dim_src + c) -= b.at(r, k);
                ++row;
            }
    }
    std::vector<RatMat> out;
    for (const auto& v : sys.nullspace()) {
        RatMat f(dim_tgt, dim_src);
        for (int r = 0; r < dim_tgt; ++r)
            for (int c = 0; c < dim_src; ++c) f.at(r, c) = v[r * dim_src + c];
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<RatMat> search_invertible(const std::vector<RatMat>& homs, unsigned seed,
                                        int trials, int dim) {
    if (homs.empty() || dim == 0) return std::nullopt;
    for (const RatMat& f : homs)
        if (f.invertible()) return f;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < trials; ++t) {
        RatMat f(dim, dim);
        for (const RatMat& h : homs) {
            int c = coeff(rng);
            if (c != 0) f = f + h.scaled(c);
        }
        if (f.invertible()) return f;
    }
    return std::nullopt;
}

}  // namespace

std::vector<RatMat> hom_space(const HModule& m, const HModule& n) {
    if (m.n != n.n) throw std::invalid_argument("hom_space: size mismatch");
    std::vector<const RatMat*> a, b;
    for (int i = 1; i < m.n; ++i) {
        a.push_back(&m.action(i));
        b.push_back(&n.action(i));
    }
    return solve_intertwiners(a, b, m.dim, n.dim);
}

std::optional<RatMat> is_isomorphic(const HModule& m, const HModule& n, unsigned seed,
                                    int trials) {
    if (m.n != n.n || m.dim != n.dim) return std::nullopt;
    if (m.dim == 0) return RatMat(0, 0);
    return search_invertible(hom_space(m, n), seed, trials, m.dim);
}

EndData end_radical(const HModule& m) {
    EndData out;
    out.end_basis = hom_space(m, m);
    const int e = static_cast<int>(out.end_basis.size());
    RatMat gram(e, e);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
            RatMat prod = out.end_basis[i] * out.end_basis[j];
            Rat tr = 0;
            for (int k = 0; k < prod.rows(); ++k) tr += prod.at(k, k);
            gram.at(i, j) = tr;
        }
    for (const auto& v : gram.nullspace()) {
        RatMat r(m.dim, m.dim);
        for (int i = 0; i < e; ++i)
            if (v[i] != 0) r = r + out.end_basis[i].scaled(v[i]);
        out.rad_basis.push_back(std::move(r));
    }
    return out;
}

bool is_indecomposable(const HModule& m) {
    if (m.dim == 0) throw std::domain_error("is_indecomposable: zero module");
    return end_radical(m).semisimple_dim() == 1;
}

namespace {

using Poly1 = std::vector<Rat>;  // coefficients, low degree first

Poly1 poly_trim(Poly1 p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly1 poly_mul1(const Poly1& a, const Poly1& b) {
    if (a.empty() || b.empty()) return {};
    Poly1 out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(out);
}

// divides a by b, returns (quotient, remainder); b must be nonzero
std::pair<Poly1, Poly1> poly_divmod(Poly1 a, const Poly1& b) {
    Poly1 q;
    a = poly_trim(a);
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = poly_trim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    return {poly_trim(q), poly_trim(a)};
}

Rat poly_eval(const Poly1& p, const Rat& x) {
    Rat v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

RatMat poly_apply(const Poly1& p, const RatMat& x) {
    const int d = x.rows();
    RatMat out(d, d);
    RatMat pw = RatMat::identity(d);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) out = out + pw.scaled(p[i]);
        if (i + 1 < p.size()) pw = pw * x;
    }
    return out;
}

// Minimal polynomial of a square matrix via Krylov on vec(x^k).
Poly1 min_poly(const RatMat& x) {
    const int d = x.rows();
    const int vec = d * d;
    std::vector<std::vector<Rat>> basis;   // echelonized Krylov vectors
    std::vector<int> pivots;
    std::vector<std::vector<Rat>> combos;  // expression of each basis row in powers
    RatMat pw = RatMat::identity(d);
    std::vector<Poly1> power_coords;
    for (int k = 0;; ++k) {
        std::vector<Rat> v(vec);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v[i * d + j] = pw.at(i, j);
        // reduce against basis, tracking the combination
        std::vector<Rat> comb(k + 1);
        comb[k] = 1;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const Rat& f = v[pivots[r]];
            if (f == 0) continue;
            Rat ff = f;
            for (int j = 0; j < vec; ++j) v[j] -= ff * basis[r][j];
            for (std::size_t c = 0; c < combos[r].size(); ++c) comb[c] -= ff * combos[r][c];
        }
        int p = -1;
        for (int j = 0; j < vec; ++j)
            if (v[j] != 0) { p = j; break; }
        if (p < 0) {
            // the tracked combination sums to zero, so it is the minimal
            // polynomial itself (monic: comb[k] stays 1 through reduction)
            return poly_trim(comb);
        }
        Rat inv = 1 / v[p];
        for (int j = 0; j < vec; ++j) v[j] *= inv;
        for (auto& c : comb) c *= inv;
        basis.push_back(std::move(v));
        pivots.push_back(p);
        combos.push_back(std::move(comb));
        pw = pw * x;
        if (k > vec + 1) throw std::logic_error("min_poly: no termination");
    }
}

std::vector<Rat> candidate_roots(const Poly1& p) {
    std::vector<Rat> out = {0, 1, -1, 2, -2, 3, -3, Rat(1, 2), Rat(-1, 2),
                            Rat(1, 3), Rat(-1, 3), Rat(2, 3), Rat(3, 2)};
    // rational-root enumeration when the cleared coefficients are small
    mpz_class lead = 1, constant = 0;
    mpz_class den = 1;
    for (const Rat& c : p) den = lcm(den, c.get_den());
    std::vector<mpz_class> ip;
    for (const Rat& c : p) ip.push_back(Rat(c * den).get_num());
    std::size_t lo = 0;
    while (lo < ip.size() && ip[lo] == 0) ++lo;  // factor out t^lo
    if (lo < ip.size()) {
        constant = abs(ip[lo]);
        lead = abs(ip.back());
        if (constant <= 1000 && lead <= 1000) {
            long cn = constant.get_si(), ld = lead.get_si();
            for (long a = 1; a <= cn; ++a) {
                if (cn % a) continue;
                for (long b = 1; b <= ld; ++b) {
                    if (ld % b) continue;
                    out.push_back(Rat(a, b));
                    out.push_back(Rat(-a, b));
                }
            }
        }
    }
    for (Rat& r : out) r.canonicalize();
    return out;
}

std::optional<RatMat> idempotent_from(const RatMat& x, int dim) {
    Poly1 mp = min_poly(x);
    if (mp.size() <= 1) return std::nullopt;
    for (const Rat& lam : candidate_roots(mp)) {
        if (poly_eval(mp, lam) != 0) continue;
        // p = (t-lam)^a q with q(lam) != 0
        Poly1 q = mp;
        Poly1 lin = {-lam, 1};
        int a = 0;
        while (true) {
            auto [qq, rem] = poly_divmod(q, lin);
            if (!rem.empty()) break;
            q = qq;
            ++a;
        }
        if (q.empty() || poly_trim(q).size() <= 0) continue;
        if (a == 0) continue;
        if (poly_trim(q) == Poly1{Rat(1)} || static_cast<int>(q.size()) == 1) continue;
        // e0 = 1 - u(x) (x-lam)^a where u (t-lam)^a + v q = 1 (Euclid)
        // compute via: e = (v q)(x); obtain v by extended gcd
        Poly1 r0 = {1};
        for (int k = 0; k < a; ++k) r0 = poly_mul1(r0, lin);  // (t-lam)^a
        // extended Euclid for (r0, q)
        Poly1 old_r = r0, r = q;
        Poly1 old_s = {1}, s = {};
        Poly1 old_t = {}, t = {1};
        while (!r.empty()) {
            auto [quot, rem] = poly_divmod(old_r, r);
            Poly1 new_s = poly_trim(old_s);
            {
                Poly1 qs = poly_mul1(quot, s);
                new_s.resize(std::max(new_s.size(), qs.size()));
                for (std::size_t i = 0; i < qs.size(); ++i) new_s[i] -= qs[i];
            }
            Poly1 new_t = poly_trim(old_t);
            {
                Poly1 qt = poly_mul1(quot, t);
                new_t.resize(std::max(new_t.size(), qt.size()));
                for (std::size_t i = 0; i < qt.size(); ++i) new_t[i] -= qt[i];
            }
            old_r = r;
            r = rem;
            old_s = s;
            s = poly_trim(new_s);
            old_t = t;
            t = poly_trim(new_t);
        }
        // old_r = gcd (a unit); old_s r0 + old_t q = old_r
        if (old_r.size() != 1 || old_r[0] == 0) continue;
        Rat unit = old_r[0];
        Poly1 v = old_t;
        for (Rat& c : v) c /= unit;
        Poly1 e_poly = poly_mul1(v, q);  // congruent to 1 mod (t-lam)^a, 0 mod q
        RatMat e = poly_apply(e_poly, x);
        if (e * e == e && !e.is_zero() && !e.is_identity()) return e;
        // complementary idempotent
        RatMat ec = RatMat::identity(dim) - e;
        if (ec * ec == ec && !ec.is_zero() && !ec.is_identity()) return ec;
    }
    return std::nullopt;
}

}  // namespace

std::optional<RatMat> find_idempotent(const HModule& m) {
    EndData ed = end_radical(m);
    if (ed.semisimple_dim() <= 1) return std::nullopt;
    for (const RatMat& x : ed.end_basis) {
        auto e = idempotent_from(x, m.dim);
        if (e && intertwines(m, m, *e)) return e;
    }
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < 64; ++t) {
        RatMat x(m.dim, m.dim);
        for (const RatMat& h : ed.end_basis) {
            int c = coeff(rng);
            if (c != 0) x = x + h.scaled(c);
        }
        auto e = idempotent_from(x, m.dim);
        if (e && intertwines(m, m, *e)) return e;
    }
    return std::nullopt;
}

namespace {

// Stack the eigen-pattern system for a subset S of the generator list:
// (A_i - I) v = 0 for i outside S, A_i v = 0 for i in S.
std::vector<std::vector<Rat>> pattern_eigenvectors(const std::vector<const RatMat*>& acts,
                                                   unsigned mask, int dim) {
    RatMat sys(static_cast<int>(acts.size()) * dim, dim);
    int row = 0;
    for (std::size_t g = 0; g < acts.size(); ++g) {
        bool kill = (mask >> g) & 1u;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) sys.at(row, c) = acts[g]->at(r, c);
            if (!kill) sys.at(row, r) -= 1;
            ++row;
        }
    }
    return sys.nullspace();
}

// Quotient the actions by a one-dimensional invariant subspace spanned by v.
std::vector<RatMat> quotient_actions(const std::vector<RatMat>& acts,
                                     const std::vector<Rat>& v, int dim) {
    int p = -1;
    for (int i = 0; i < dim; ++i)
        if (v[i] != 0) { p = i; break; }
    std::vector<int> keep;
    for (int i = 0; i < dim; ++i)
        if (i != p) keep.push_back(i);
    std::vector<RatMat> out;
    for (const RatMat& a : acts) {
        RatMat q(dim - 1, dim - 1);
        for (int bi = 0; bi < dim - 1; ++bi) {
            int i = keep[bi];
            for (int bj = 0; bj < dim - 1; ++bj) {
                int j = keep[bj];
                q.at(bi, bj) = a.at(i, j) - a.at(p, j) * v[i] / v[p];
            }
        }
        out.push_back(std::move(q));
    }
    return out;
}

// Generic Jordan-Hoelder peeling over an arbitrary generator list; reports the
// kill-pattern subset (as a bitmask over the generator list) of each factor.
std::vector<unsigned> jordan_hoelder_patterns(std::vector<RatMat> acts, int dim) {
    std::vector<unsigned> out;
    const int g = static_cast<int>(acts.size());
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << g); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    while (dim > 0) {
        bool found = false;
        for (unsigned mask : masks) {
            std::vector<const RatMat*> ptr;
            for (const RatMat& a : acts) ptr.push_back(&a);
            auto null = pattern_eigenvectors(ptr, mask, dim);
            std::vector<Rat>* pick = nullptr;
            for (auto& v : null) {
                // eigenvector must realize the pattern exactly: A_i v = 0 only
                // for i in S. The stacked system already forces both sides, so
                // any nullspace vector works.
                pick = &v;
                break;
            }
            if (!pick) continue;
            out.push_back(mask);
            acts = quotient_actions(acts, *pick, dim);
            --dim;
            found = true;
            break;
        }
        if (!found) throw std::logic_error("composition_factors: no eigenvector found");
    }
    return out;
}

}  // namespace

std::vector<Composition> composition_factors(const HModule& m) {
    auto patterns = jordan_hoelder_patterns(m.act, m.dim);
    std::vector<Composition> out;
    for (unsigned mask : patterns) {
        std::set<int> S;
        for (int i = 1; i < m.n; ++i)
            if ((mask >> (i - 1)) & 1u) S.insert(i);
        out.push_back(Composition::of_set(S, m.n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QSym ch_module(const HModule& m) {
    if (m.monomial && m.labels) {
        QSym out;
        for (const Perm& p : *m.labels) out.add(comp_of_perm(p).complement(), 1);
        return out;
    }
    QSym out;
    for (const Composition& a : composition_factors(m)) out.add(a, 1);
    return out;
}

std::pair<std::optional<int>, std::optional<int>> source_sink(const HModule& m) {
    if (!m.monomial || !matrices_monomial(m))
        throw std::domain_error("source_sink: module is not monomial");
    // move edges u -> v (v != u)
    std::vector<std::vector<int>> adj(m.dim);
    for (int i = 1; i < m.n; ++i)
        for (int u = 0; u < m.dim; ++u)
            for (int v = 0; v < m.dim; ++v)
                if (v != u && m.action(i).at(v, u) != 0) adj[u].push_back(v);
    auto reach_from = [&](int s) {
        std::vector<char> vis(m.dim, 0);
        std::vector<int> stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!vis[v]) { vis[v] = 1; stack.push_back(v); }
        }
        return vis;
    };
    std::vector<std::vector<char>> reach;
    for (int u = 0; u < m.dim; ++u) reach.push_back(reach_from(u));
    std::optional<int> source, sink;
    int nsrc = 0, nsink = 0;
    for (int u = 0; u < m.dim; ++u) {
        bool all_from_u = true, u_from_all = true;
        for (int v = 0; v < m.dim; ++v) {
            if (!reach[u][v]) all_from_u = false;
            if (!reach[v][u]) u_from_all = false;
        }
        if (all_from_u) { source = u; ++nsrc; }
        if (u_from_all) { sink = u; ++nsink; }
    }
    if (nsrc != 1) source = std::nullopt;
    if (nsink != 1) sink = std::nullopt;
    return {source, sink};
}

BiModule restrict_at(const HModule& mod, int m) {
    if (m < 1 || m >= mod.n) throw std::invalid_argument("restrict_at: bad seam");
    BiModule out;
    out.m = m;
    out.n = mod.n - m;
    out.dim = mod.dim;
    for (int i = 1; i < m; ++i) out.left.push_back(mod.action(i));
    for (int i = m + 1; i < mod.n; ++i) out.right.push_back(mod.action(i));
    return out;
}

BiModule tensor(const HModule& a, const HModule& b) {
    BiModule out;
    out.m = a.n;
    out.n = b.n;
    out.dim = a.dim * b.dim;
    RatMat ia = RatMat::identity(a.dim), ib = RatMat::identity(b.dim);
    for (int i = 1; i < a.n; ++i) out.left.push_back(RatMat::kron(a.action(i), ib));
    for (int j = 1; j < b.n; ++j) out.right.push_back(RatMat::kron(ia, b.action(j)));
    return out;
}

BiModule direct_sum(const BiModule& a, const BiModule& b) {
    if (a.m != b.m || a.n != b.n) throw std::invalid_argument("BiModule sum: mismatch");
    BiModule out;
    out.m = a.m;
    out.n = a.n;
    out.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.left.size(); ++i)
        out.left.push_back(RatMat::direct_sum(a.left[i], b.left[i]));
    for (std::size_t i = 0; i < a.right.size(); ++i)
        out.right.push_back(RatMat::direct_sum(a.right[i], b.right[i]));
    return out;
}

bool intertwines(const BiModule& src, const BiModule& tgt, const RatMat& f) {
    if (src.m != tgt.m || src.n != tgt.n) return false;
    for (std::size_t i = 0; i < src.left.size(); ++i)
        if (f * src.left[i] != tgt.left[i] * f) return false;
    for (std::size_t i = 0; i < src.right.size(); ++i)
        if (f * src.right[i] != tgt.right[i] * f) return false;
    return true;
}

std::vector<RatMat> hom_space(const BiModule& a, const BiModule& b) {
    if (a.m != b.m || a.n != b.n) throw std::invalid_argument("hom_space: mismatch");
    std::vector<const RatMat*> s, t;
    for (std::size_t i = 0; i < a.left.size(); ++i) {
        s.push_back(&a.left[i]);
        t.push_back(&b.left[i]);
    }
    for (std::size_t i = 0; i < a.right.size(); ++i) {
        s.push_back(&a.right[i]);
        t.push_back(&b.right[i]);
    }
    return solve_intertwiners(s, t, a.dim, b.dim);
}

std::optional<RatMat> is_isomorphic(const BiModule& a, const BiModule& b, unsigned seed,
                                    int trials) {
    if (a.dim != b.dim) return std::nullopt;
    if (a.dim == 0) return RatMat(0, 0);
    return search_invertible(hom_space(a, b), seed, trials, a.dim);
}

std::vector<std::pair<Composition, Composition>> composition_factors_bi(const BiModule& m) {
    std::vector<RatMat> acts = m.left;
    acts.insert(acts.end(), m.right.begin(), m.right.end());
    auto patterns = jordan_hoelder_patterns(acts, m.dim);
    std::vector<std::pair<Composition, Composition>> out;
    const int gl = static_cast<int>(m.left.size());
    for (unsigned mask : patterns) {
        std::set<int> S1, S2;
        for (int i = 0; i < gl; ++i)
            if ((mask >> i) & 1u) S1.insert(i + 1);
        for (int i = 0; i < static_cast<int>(m.right.size()); ++i)
            if ((mask >> (gl + i)) & 1u) S2.insert(i + 1);
        out.emplace_back(Composition::of_set(S1, m.m), Composition::of_set(S2, m.n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bruhat
