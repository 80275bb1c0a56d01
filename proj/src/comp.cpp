#include "bruhat/comp.hpp"

#include <sstream>
#include <stdexcept>

namespace bruhat {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
    for (int p : parts_) size_ += p;
}

Composition Composition::of_set(const std::set<int>& I, int n) {
    if (n == 0) {
        if (!I.empty()) throw std::invalid_argument("comp: nonempty set for n=0");
        return Composition();
    }
    std::vector<int> parts;
    int prev = 0;
    for (int i : I) {
        if (i < 1 || i >= n) throw std::invalid_argument("comp: set not inside [n-1]");
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::parse(const std::string& s) {
    if (s.empty()) return Composition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Composition(std::move(parts));
}

std::set<int> Composition::to_set() const {
    std::set<int> I;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        I.insert(acc);
    }
    return I;
}

Composition Composition::reverse() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

Composition Composition::complement() const {
    std::set<int> I = to_set();
    std::set<int> J;
    for (int i = 1; i < size_; ++i)
        if (!I.count(i)) J.insert(i);
    return of_set(J, size_);
}

Composition Composition::transpose() const { return reverse().complement(); }

std::string Composition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Composition comp_of_perm(const Perm& g) {
    return Composition::of_set(g.descents(Side::Left), g.size());
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back(Composition());
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> I;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) I.insert(i);
        out.push_back(Composition::of_set(I, n));
    }
    return out;
}

Perm w0_of(const Composition& a) { return parabolic_longest(a.to_set(), a.size()); }

Perm w0_of(const std::set<int>& I, int n) { return parabolic_longest(I, n); }

GeneralizedComposition::GeneralizedComposition(std::vector<Composition> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw std::invalid_argument("GeneralizedComposition: needs at least one block");
    for (const auto& b : blocks_)
        if (b.size() == 0)
            throw std::invalid_argument("GeneralizedComposition: empty block");
}

GeneralizedComposition GeneralizedComposition::parse(const std::string& s) {
    std::vector<Composition> blocks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) blocks.push_back(Composition::parse(tok));
    return GeneralizedComposition(std::move(blocks));
}

int GeneralizedComposition::size() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
}

GeneralizedComposition GeneralizedComposition::complement() const {
    std::vector<Composition> b;
    b.reserve(blocks_.size());
    for (const auto& blk : blocks_) b.push_back(blk.complement());
    return GeneralizedComposition(std::move(b));
}

Composition GeneralizedComposition::concatenated() const {
    std::vector<int> parts;
    for (const auto& blk : blocks_)
        parts.insert(parts.end(), blk.parts().begin(), blk.parts().end());
    return Composition(std::move(parts));
}

Perm GeneralizedComposition::w0() const {
    // Blocks stay separate: the longest element of the parabolic generated by
    // the within-block descents only (block boundaries are excluded), i.e. the
    // star product of the blockwise longest elements.
    Perm p = w0_of(blocks_.front());
    for (std::size_t i = 1; i < blocks_.size(); ++i) p = star(p, w0_of(blocks_[i]));
    return p;
}

std::string GeneralizedComposition::str() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        out += blocks_[i].str();
    }
    return out;
}

}  // namespace bruhat
