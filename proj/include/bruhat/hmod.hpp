#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bruhat/matrix.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/qsym.hpp"

namespace bruhat {

/// A finite-dimensional H_n(0)-module given by the n-1 exact action matrices
/// of pi_1..pi_{n-1}, with optional permutation labels for monomial bases.
struct HModule {
    int n = 0;
    int dim = 0;
    std::vector<RatMat> act;  // act[i-1] = matrix of pi_i (columns = basis images)
    std::optional<std::vector<Perm>> labels;
    bool monomial = false;

    const RatMat& action(int i) const { return act[i - 1]; }
    RatMat& action(int i) { return act[i - 1]; }

    std::string json() const;
};

HModule zero_module(int n);
HModule direct_sum(const HModule& a, const HModule& b);
// Outer tensor product along the seam: an H_{m+n}(0)-style container where
// the seam generator pi_m is intentionally zeroed and must not be used.
bool check_relations(const HModule& m);
bool matrices_monomial(const HModule& m);

struct ModuleMap {
    HModule source;
    HModule target;
    RatMat matrix;  // v_target = matrix * v_source
    bool verify() const;
    bool is_isomorphism() const;
};

bool intertwines(const HModule& src, const HModule& tgt, const RatMat& f);

std::vector<RatMat> hom_space(const HModule& m, const HModule& n);
std::optional<RatMat> is_isomorphic(const HModule& m, const HModule& n,
                                    unsigned seed = 0, int trials = 64);

struct EndData {
    std::vector<RatMat> end_basis;
    std::vector<RatMat> rad_basis;
    int semisimple_dim() const {
        return static_cast<int>(end_basis.size() - rad_basis.size());
    }
};

// Radical via the trace form (characteristic zero).
EndData end_radical(const HModule& m);

bool is_indecomposable(const HModule& m);  // throws on the zero module

// A nontrivial idempotent endomorphism when one exists, found as an exact
// spectral projector of an End element with a rational eigenvalue; nullopt
// when End is local or the search fails.
std::optional<RatMat> find_idempotent(const HModule& m);

// Jordan-Hoelder multiset, deterministic order (sorted).
std::vector<Composition> composition_factors(const HModule& m);

// Quasisymmetric characteristic: by labels for monomial modules with
// permutation labels, otherwise through composition factors.
QSym ch_module(const HModule& m);

// (source index, sink index) of a monomial module; throws when the module is
// not monomial.
std::pair<std::optional<int>, std::optional<int>> source_sink(const HModule& m);

/// An H_m(0) (x) H_n(0)-module: actions of pi_1..pi_{m-1} (left block) and
/// pi_{m+1}..pi_{m+n-1} (right block, reindexed from 1).
struct BiModule {
    int m = 0;
    int n = 0;
    int dim = 0;
    std::vector<RatMat> left;
    std::vector<RatMat> right;
};

BiModule restrict_at(const HModule& mod, int m);
BiModule tensor(const HModule& a, const HModule& b);
BiModule direct_sum(const BiModule& a, const BiModule& b);
bool intertwines(const BiModule& src, const BiModule& tgt, const RatMat& f);
std::vector<RatMat> hom_space(const BiModule& a, const BiModule& b);
std::optional<RatMat> is_isomorphic(const BiModule& a, const BiModule& b,
                                    unsigned seed = 0, int trials = 64);

// Jordan-Hoelder pairs (alpha, beta) of a bimodule.
std::vector<std::pair<Composition, Composition>> composition_factors_bi(const BiModule& m);

}  // namespace bruhat
