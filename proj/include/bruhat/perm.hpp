#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace bruhat {

enum class Side { Left, Right };

// Construction cap on n; default 12, overridable via BRUHAT_HECKE_MAX_N.
int max_n();

/// A permutation of [n] in one-line notation (1-based values).
/// Immutable after construction; the length (inversion count) is cached.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> word);

    static Perm identity(int n);
    static Perm simple(int i, int n);   // s_i
    static Perm longest(int n);         // w0
    // Accepts "24315" (n <= 9) or "10,2,...,1".
    static Perm parse(const std::string& s);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    int length() const { return len_; }
    bool is_identity() const;
    Perm inverse() const;

    // Left multiplication by s_i: swaps the values i, i+1.
    Perm lmul_s(int i) const;
    // Right multiplication by s_i: swaps positions i, i+1.
    Perm rmul_s(int i) const;

    std::set<int> descents(Side side) const;
    bool has_descent(Side side, int i) const;

    // Lexicographically smallest reduced word, as generator indices.
    std::vector<int> reduced_word() const;

    Perm conjugate_w0() const;  // w0 sigma w0

    std::string str() const;

    bool operator==(const Perm& o) const { return word_ == o.word_; }
    bool operator!=(const Perm& o) const { return word_ != o.word_; }
    bool operator<(const Perm& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
    int len_ = 0;
};

// (a . b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);

// s_{w[0]} s_{w[1]} ... s_{w.back()} as an element of S_n.
Perm from_word(const std::vector<int>& gens, int n);

// Longest element of the parabolic subgroup generated by {s_i : i in I}.
Perm parabolic_longest(const std::set<int>& gens, int n);

// st(sigma;[lo,hi]): order-isomorphic relabeling of a window.
Perm standardize(const Perm& p, int lo, int hi);

Perm star(const Perm& a, const Perm& b);    // sigma * rho
Perm ostar(const Perm& a, const Perm& b);   // sigma (shifted) then rho

// Minimal-length coset representatives of S_{[m-1] u [m+1,m+n-1]} in S_{m+n},
// i.e. delta increasing on [1,m] and on [m+1,m+n]; lexicographic order.
std::vector<Perm> min_coset_reps(int m, int n);

// All permutations of [n] in lexicographic order.
std::vector<Perm> all_perms(int n);

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

// (length, lex) ordering; the canonical basis order for Hecke elements.
struct LenLex {
    bool operator()(const Perm& a, const Perm& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word() < b.word();
    }
};

}  // namespace bruhat
