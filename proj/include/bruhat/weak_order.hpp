#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

// sigma <=_L rho in the left weak Bruhat order
bool leq_left(const Perm& sigma, const Perm& rho);

struct IntervalEdge {
    int from = 0;
    int to = 0;
    int color = 0;
};

/// [sigma,rho]_L materialized as a colored digraph. Vertices are stored in
/// (rank, lex) order so downstream matrices and serializations are canonical.
struct Interval {
    Perm bottom;
    Perm top;
    std::vector<Perm> vertices;
    std::vector<IntervalEdge> edges;

    int size() const { return static_cast<int>(vertices.size()); }
    int index_of(const Perm& p) const;  // -1 when absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    std::string dot() const;
    std::string json() const;
};

// Throws std::domain_error when sigma is not below rho.
Interval interval(const Perm& sigma, const Perm& rho);

// All (m,n)-shuffles of sigma and rho: {delta (sigma*rho) : delta minimal rep}.
std::vector<Perm> shuffle_set(const Perm& sigma, const Perm& rho);

// perm_J and perm^J for an m-subset J of [m+n].
Perm perm_lower(const std::vector<int>& J, int N);
Perm perm_upper(const std::vector<int>& J, int N);

// frakI(sigma, rho; J): interval vertices gamma with gamma^{-1}([1,m]) = J.
std::vector<Perm> frak_interval(const Interval& iv, const std::vector<int>& J);

struct RestrictionBlock {
    std::vector<int> J;
    Perm sigma_J;  // perm_{sigma.J} sigma
    Perm rho_J;    // perm^{(w0 rho).J} w0 rho
};

// The admissible J's at seam m together with the interval frames
// [sigma_J, rho^J]_L partitioning [sigma,rho]_L.
std::vector<RestrictionBlock> restriction_data(const Perm& sigma, const Perm& rho, int m);

// (gamma_{<=m}, gamma_{>m})
std::pair<Perm, Perm> split(const Perm& gamma, int m);

// Descent-preserving colored-digraph isomorphism, anchored at the bottoms and
// propagated along colored edges; nullopt when none exists.
std::optional<std::vector<int>> descent_preserving_iso(const Interval& a, const Interval& b);

// Comparable pairs (sigma, rho) with sigma <=_L rho in S_n, in (sigma, rho)
// lexicographic order.
std::vector<std::pair<Perm, Perm>> comparable_pairs(int n);

// Deterministic sample of comparable pairs in S_n: random top, random cut of a
// random reduced word. Pairs may repeat.
std::vector<std::pair<Perm, Perm>> sampled_pairs(int n, int count, unsigned seed);

}  // namespace bruhat
