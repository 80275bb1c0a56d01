#include "bruhat/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bruhat {

int max_n() {
    static const int cap = [] {
        if (const char* env = std::getenv("BRUHAT_HECKE_MAX_N")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 12;
    }();
    return cap;
}

namespace {

int inversion_count(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

}  // namespace

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n > max_n())
        throw std::invalid_argument("Perm: n exceeds cap " + std::to_string(max_n()));
    std::vector<char> seen(n + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Perm: word is not a bijection of [n]");
        seen[v] = 1;
    }
    len_ = inversion_count(word_);
}

Perm Perm::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

Perm Perm::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple: index out of range");
    Perm p = identity(n);
    std::swap(p.word_[i - 1], p.word_[i]);
    p.len_ = 1;
    return p;
}

Perm Perm::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Perm(std::move(w));
}

Perm Perm::parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("Perm::parse: bad digit");
            w.push_back(c - '0');
        }
    }
    return Perm(std::move(w));
}

bool Perm::is_identity() const { return len_ == 0; }

Perm Perm::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) w[word_[i] - 1] = static_cast<int>(i) + 1;
    Perm p;
    p.word_ = std::move(w);
    p.len_ = len_;
    return p;
}

Perm Perm::lmul_s(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("lmul_s: index out of range");
    Perm p = *this;
    int pi = -1, pj = -1;
    for (int k = 0; k < size(); ++k) {
        if (p.word_[k] == i) pi = k;
        else if (p.word_[k] == i + 1) pj = k;
    }
    std::swap(p.word_[pi], p.word_[pj]);
    p.len_ += (pi < pj) ? 1 : -1;
    return p;
}

Perm Perm::rmul_s(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("rmul_s: index out of range");
    Perm p = *this;
    std::swap(p.word_[i - 1], p.word_[i]);
    p.len_ += (word_[i - 1] < word_[i]) ? 1 : -1;
    return p;
}

std::set<int> Perm::descents(Side side) const {
    std::set<int> d;
    for (int i = 1; i < size(); ++i)
        if (has_descent(side, i)) d.insert(i);
    return d;
}

bool Perm::has_descent(Side side, int i) const {
    if (side == Side::Right) return word_[i - 1] > word_[i];
    // i is right of i+1 in the one-line word
    int pi = 0, pj = 0;
    for (int k = 0; k < size(); ++k) {
        if (word_[k] == i) pi = k;
        else if (word_[k] == i + 1) pj = k;
    }
    return pi > pj;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> out;
    Perm cur = *this;
    while (!cur.is_identity()) {
        for (int i = 1; i < size(); ++i) {
            if (cur.has_descent(Side::Left, i)) {
                out.push_back(i);
                cur = cur.lmul_s(i);
                break;
            }
        }
    }
    return out;
}

Perm Perm::conjugate_w0() const {
    const int n = size();
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - word_[n - i];
    Perm p;
    p.word_ = std::move(w);
    p.len_ = len_;
    return p;
}

std::string Perm::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : word_) out += static_cast<char>('0' + v);
    } else {
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(word_[i]);
        }
    }
    return out;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(a.size());
    for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
    return Perm(std::move(w));
}

Perm from_word(const std::vector<int>& gens, int n) {
    Perm p = Perm::identity(n);
    for (int i : gens) {
        if (i < 1 || i >= n) throw std::invalid_argument("from_word: index out of range");
        p = p.rmul_s(i);
    }
    return p;
}

Perm parabolic_longest(const std::set<int>& gens, int n) {
    for (int i : gens)
        if (i < 1 || i >= n) throw std::invalid_argument("parabolic_longest: index out of range");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    // maximal runs of consecutive generators [a,b] reverse the block [a,b+1]
    int i = 1;
    while (i < n) {
        if (!gens.count(i)) { ++i; continue; }
        int j = i;
        while (j + 1 < n && gens.count(j + 1)) ++j;
        std::reverse(w.begin() + (i - 1), w.begin() + (j + 1));
        i = j + 1;
    }
    return Perm(std::move(w));
}

Perm standardize(const Perm& p, int lo, int hi) {
    if (lo < 1 || hi > p.size() || lo > hi)
        throw std::invalid_argument("standardize: bad window");
    const int k = hi - lo + 1;
    std::vector<int> vals(p.word().begin() + (lo - 1), p.word().begin() + hi);
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i)
        w[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) -
                                sorted.begin()) + 1;
    return Perm(std::move(w));
}

Perm star(const Perm& a, const Perm& b) {
    const int m = a.size(), n = b.size();
    std::vector<int> w(m + n);
    for (int i = 1; i <= m; ++i) w[i - 1] = a(i);
    for (int i = 1; i <= n; ++i) w[m + i - 1] = b(i) + m;
    return Perm(std::move(w));
}

Perm ostar(const Perm& a, const Perm& b) {
    const int m = a.size(), n = b.size();
    std::vector<int> w(m + n);
    for (int i = 1; i <= m; ++i) w[i - 1] = a(i) + n;
    for (int i = 1; i <= n; ++i) w[m + i - 1] = b(i);
    return Perm(std::move(w));
}

std::vector<Perm> min_coset_reps(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("min_coset_reps: m,n >= 1");
    const int N = m + n;
    std::vector<Perm> out;
    std::vector<int> pick(m);
    // iterate m-subsets of [N] in lexicographic order
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        std::vector<char> in(N + 1, 0);
        for (int v : pick) in[v] = 1;
        std::vector<int> word(pick.begin(), pick.end());
        for (int v = 1; v <= N; ++v) if (!in[v]) word.push_back(v);
        out.emplace_back(std::move(word));
        // next subset
        int i = m - 1;
        while (i >= 0 && pick[i] == N - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.word()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace bruhat
