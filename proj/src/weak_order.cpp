#include "bruhat/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bruhat {

bool leq_left(const Perm& sigma, const Perm& rho) {
    if (sigma.size() != rho.size()) throw std::invalid_argument("leq_left: size mismatch");
    if (sigma.length() > rho.length()) return false;
    return rho.length() == sigma.length() + compose(rho, sigma.inverse()).length();
}

int Interval::index_of(const Perm& p) const {
    auto cmp = [](const Perm& a, const Perm& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word() < b.word();
    };
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p, cmp);
    if (it != vertices.end() && *it == p) return static_cast<int>(it - vertices.begin());
    return -1;
}

Interval interval(const Perm& sigma, const Perm& rho) {
    if (!leq_left(sigma, rho)) throw std::domain_error("interval: sigma not below rho");
    const int n = sigma.size();
    Interval iv;
    iv.bottom = sigma;
    iv.top = rho;

    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> queue;
    seen.insert(sigma);
    queue.push_back(sigma);
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        iv.vertices.push_back(cur);
        for (int i = 1; i < n; ++i) {
            if (cur.has_descent(Side::Left, i)) continue;
            Perm next = cur.lmul_s(i);
            if (seen.count(next)) continue;
            if (!leq_left(next, rho)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    std::sort(iv.vertices.begin(), iv.vertices.end(), [](const Perm& a, const Perm& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word() < b.word();
    });
    for (int u = 0; u < iv.size(); ++u) {
        const Perm& g = iv.vertices[u];
        for (int i = 1; i < n; ++i) {
            if (g.has_descent(Side::Left, i)) continue;
            int v = iv.index_of(g.lmul_s(i));
            if (v >= 0) iv.edges.push_back({u, v, i});
        }
    }
    return iv;
}

std::string Interval::dot() const {
    std::string out = "digraph interval {\n";
    for (int u = 0; u < size(); ++u) {
        out += "  v" + std::to_string(u) + " [label=\"" + vertices[u].str() + "\"];\n";
        auto des = vertices[u].descents(Side::Left);
        for (int i : des)
            out += "  v" + std::to_string(u) + " -> v" + std::to_string(u) +
                   " [label=\"" + std::to_string(i) + "\", style=dashed];\n";
    }
    for (const auto& e : edges)
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) +
               " [label=\"" + std::to_string(e.color) + "\"];\n";
    out += "}\n";
    return out;
}

std::string Interval::json() const {
    std::string out = "{\"bottom\":\"" + bottom.str() + "\",\"top\":\"" + top.str() +
                      "\",\"vertices\":[";
    for (int u = 0; u < size(); ++u) {
        if (u) out += ",";
        out += "\"" + vertices[u].str() + "\"";
    }
    out += "],\"edges\":[";
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k) out += ",";
        out += "[" + std::to_string(edges[k].from) + "," + std::to_string(edges[k].to) +
               "," + std::to_string(edges[k].color) + "]";
    }
    out += "]}";
    return out;
}

std::vector<Perm> shuffle_set(const Perm& sigma, const Perm& rho) {
    Perm base = star(sigma, rho);
    std::vector<Perm> out;
    for (const Perm& d : min_coset_reps(sigma.size(), rho.size()))
        out.push_back(compose(d, base));
    std::sort(out.begin(), out.end());
    return out;
}

Perm perm_lower(const std::vector<int>& J, int N) {
    const int m = static_cast<int>(J.size());
    std::vector<char> in(N + 1, 0);
    for (int j : J) {
        if (j < 1 || j > N || in[j]) throw std::invalid_argument("perm_lower: bad subset");
        in[j] = 1;
    }
    std::vector<int> w(N);
    int k = 0, s = 0;
    for (int v = 1; v <= N; ++v) {
        if (in[v]) w[v - 1] = ++k;
        else w[v - 1] = m + (++s);
    }
    return Perm(std::move(w));
}

Perm perm_upper(const std::vector<int>& J, int N) {
    const int m = static_cast<int>(J.size());
    const int n = N - m;
    std::vector<char> in(N + 1, 0);
    for (int j : J) {
        if (j < 1 || j > N || in[j]) throw std::invalid_argument("perm_upper: bad subset");
        in[j] = 1;
    }
    std::vector<int> w(N);
    int k = 0, s = 0;
    for (int v = 1; v <= N; ++v) {
        if (in[v]) { ++k; w[v - 1] = m - k + 1; }
        else { ++s; w[v - 1] = m + n - s + 1; }
    }
    return Perm(std::move(w));
}

std::vector<Perm> frak_interval(const Interval& iv, const std::vector<int>& J) {
    std::vector<char> in(iv.bottom.size() + 1, 0);
    for (int j : J) in[j] = 1;
    const int m = static_cast<int>(J.size());
    std::vector<Perm> out;
    for (const Perm& g : iv.vertices) {
        bool ok = true;
        for (int pos = 1; pos <= g.size() && ok; ++pos) {
            bool low = g(pos) <= m;
            if (low != static_cast<bool>(in[pos])) ok = false;
        }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<RestrictionBlock> restriction_data(const Perm& sigma, const Perm& rho, int m) {
    const int N = sigma.size();
    // m = 0 and m = N are allowed for the degenerate Mackey cases
    if (m < 0 || m > N) throw std::invalid_argument("restriction_data: bad seam");
    if (!leq_left(sigma, rho)) throw std::domain_error("restriction_data: not comparable");
    Perm w0 = Perm::longest(N);
    Perm top_frame = compose(rho, sigma.inverse());
    Perm w0rho = compose(w0, rho);
    std::vector<RestrictionBlock> out;
    // iterate m-subsets of [N] in lexicographic order
    std::vector<int> J(m);
    for (int i = 0; i < m; ++i) J[i] = i + 1;
    while (true) {
        std::vector<int> sigmaJ(m), w0rhoJ(m);
        for (int i = 0; i < m; ++i) {
            sigmaJ[i] = sigma(J[i]);
            w0rhoJ[i] = w0rho(J[i]);
        }
        std::sort(sigmaJ.begin(), sigmaJ.end());
        std::sort(w0rhoJ.begin(), w0rhoJ.end());
        Perm pl = perm_lower(sigmaJ, N);
        if (leq_left(pl, top_frame)) {
            RestrictionBlock blk;
            blk.J = J;
            blk.sigma_J = compose(pl, sigma);
            blk.rho_J = compose(perm_upper(w0rhoJ, N), w0rho);
            out.push_back(std::move(blk));
        }
        int i = m - 1;
        while (i >= 0 && J[i] == N - (m - 1 - i)) --i;
        if (i < 0) break;
        ++J[i];
        for (int j = i + 1; j < m; ++j) J[j] = J[j - 1] + 1;
    }
    return out;
}

std::pair<Perm, Perm> split(const Perm& gamma, int m) {
    const int N = gamma.size();
    if (m < 0 || m > N) throw std::invalid_argument("split: bad seam");
    std::vector<int> lo, hi;
    for (int pos = 1; pos <= N; ++pos) {
        int v = gamma(pos);
        if (v <= m) lo.push_back(v);
        else hi.push_back(v - m);
    }
    return {Perm(std::move(lo)), Perm(std::move(hi))};
}

std::optional<std::vector<int>> descent_preserving_iso(const Interval& a, const Interval& b) {
    if (a.size() != b.size()) return std::nullopt;
    const int sz = a.size();
    std::vector<int> map(sz, -1);
    map[0] = 0;  // anchor: bottom -> bottom (vertex 0 in (rank, lex) order)
    if (a.vertices[0] != a.bottom || b.vertices[0] != b.bottom) {
        // bottoms are rank 0, hence always index 0; guard anyway
        return std::nullopt;
    }
    // adjacency by color
    const int n = a.bottom.size();
    auto edge_table = [n](const Interval& iv) {
        std::vector<std::vector<int>> t(iv.size(), std::vector<int>(n, -1));
        for (const auto& e : iv.edges) t[e.from][e.color] = e.to;
        return t;
    };
    auto ta = edge_table(a), tb = edge_table(b);
    std::deque<int> queue{0};
    std::vector<char> visited(sz, 0);
    visited[0] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int v = map[u];
        if (a.vertices[u].descents(Side::Left) != b.vertices[v].descents(Side::Left))
            return std::nullopt;
        for (int i = 1; i < n; ++i) {
            int ua = ta[u][i], vb = tb[v][i];
            if ((ua < 0) != (vb < 0)) return std::nullopt;
            if (ua < 0) continue;
            if (map[ua] >= 0) {
                if (map[ua] != vb) return std::nullopt;
            } else {
                map[ua] = vb;
            }
            if (!visited[ua]) {
                visited[ua] = 1;
                queue.push_back(ua);
            }
        }
    }
    // must be a bijection covering both sides
    std::vector<char> hit(sz, 0);
    for (int u = 0; u < sz; ++u) {
        if (map[u] < 0 || hit[map[u]]) return std::nullopt;
        hit[map[u]] = 1;
    }
    return map;
}

std::vector<std::pair<Perm, Perm>> comparable_pairs(int n) {
    std::vector<std::pair<Perm, Perm>> out;
    auto perms = all_perms(n);
    for (const Perm& s : perms)
        for (const Perm& r : perms)
            if (leq_left(s, r)) out.emplace_back(s, r);
    return out;
}

std::vector<std::pair<Perm, Perm>> sampled_pairs(int n, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<Perm, Perm>> out;
    out.reserve(count);
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    while (static_cast<int>(out.size()) < count) {
        std::vector<int> w = base;
        std::shuffle(w.begin(), w.end(), rng);
        Perm rho{w};
        // random reduced word by walking down, then a random cut
        std::vector<int> word;
        Perm cur = rho;
        while (!cur.is_identity()) {
            std::vector<int> des;
            for (int i = 1; i < n; ++i)
                if (cur.has_descent(Side::Left, i)) des.push_back(i);
            int i = des[std::uniform_int_distribution<int>(0, (int)des.size() - 1)(rng)];
            word.push_back(i);
            cur = cur.lmul_s(i);
        }
        int cut = std::uniform_int_distribution<int>(0, (int)word.size())(rng);
        // sigma = s_{word[cut]} ... s_{word.back()} applied to id (suffix product)
        Perm sigma = Perm::identity(n);
        for (int k = (int)word.size() - 1; k >= cut; --k) sigma = sigma.lmul_s(word[k]);
        out.emplace_back(sigma, rho);
    }
    return out;
}

}  // namespace bruhat
