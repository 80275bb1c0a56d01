#pragma once

#include <set>
#include <string>
#include <vector>

#include "bruhat/perm.hpp"

namespace bruhat {

/// A composition of n: an ordered list of positive parts.
class Composition {
public:
    Composition() = default;  // the empty composition
    explicit Composition(std::vector<int> parts);

    static Composition of_set(const std::set<int>& I, int n);  // comp(I)
    static Composition parse(const std::string& s);            // "3,2"

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                 // |alpha|
    int length() const { return static_cast<int>(parts_.size()); }

    std::set<int> to_set() const;                      // set(alpha)

    Composition reverse() const;
    Composition complement() const;
    Composition transpose() const;

    std::string str() const;

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// comp(gamma) := comp(Des_L(gamma))
Composition comp_of_perm(const Perm& g);

// All compositions of n (n >= 0), ordered by subset rank of set(alpha).
std::vector<Composition> all_compositions(int n);

// w0(alpha) := w0(set(alpha)) inside S_n with n = |alpha| by default,
// or inside S_n for an explicit n.
Perm w0_of(const Composition& a);
Perm w0_of(const std::set<int>& I, int n);

/// A formal direct sum of compositions (blocks).
class GeneralizedComposition {
public:
    explicit GeneralizedComposition(std::vector<Composition> blocks);

    static GeneralizedComposition parse(const std::string& s);  // "2,1|3"

    const std::vector<Composition>& blocks() const { return blocks_; }
    int size() const;

    GeneralizedComposition complement() const;  // blockwise
    Composition concatenated() const;
    Perm w0() const;  // w0 of the concatenation

    std::string str() const;

private:
    std::vector<Composition> blocks_;
};

}  // namespace bruhat
