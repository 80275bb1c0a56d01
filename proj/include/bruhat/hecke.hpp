#pragma once

#include <map>
#include <string>
#include <vector>

#include "bruhat/matrix.hpp"
#include "bruhat/perm.hpp"

namespace bruhat {

// The 0-Hecke monoid product: pi_sigma pi_tau = pi_{sigma (.) tau}.
Perm pi_mul_basis(const Perm& sigma, const Perm& tau);

/// A sparse exact linear combination of pi-basis elements of H_n(0).
/// Terms are kept in (length, lex) order and never store zero coefficients.
class HeckeElem {
public:
    explicit HeckeElem(int n) : n_(n) {}
    static HeckeElem zero(int n) { return HeckeElem(n); }
    static HeckeElem basis(const Perm& p);                 // pi_p
    static HeckeElem one(int n) { return basis(Perm::identity(n)); }

    int n() const { return n_; }
    const std::map<Perm, Rat, LenLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    HeckeElem& add(const Perm& p, const Rat& c);
    HeckeElem operator+(const HeckeElem& o) const;
    HeckeElem operator-(const HeckeElem& o) const;
    HeckeElem operator*(const Rat& c) const;
    bool operator==(const HeckeElem& o) const { return terms_ == o.terms_; }

    // pi_i * x and x * pi_i
    HeckeElem lmul_pi(int i) const;
    HeckeElem rmul_pi(int i) const;

    std::string str() const;   // "π[24315] - π[14325]"
    std::string json() const;

private:
    int n_;
    std::map<Perm, Rat, LenLex> terms_;
};

HeckeElem mul(const HeckeElem& a, const HeckeElem& b);

// pibar_sigma = prod (pi_i - 1) over a reduced word, expanded in the pi basis.
HeckeElem pibar_of(const Perm& sigma);

struct PiPibar {
    HeckeElem value;
    bool nonzero;        // iff l(sigma rho) = l(sigma) + l(rho)
    bool length_additive;
    bool below_w0_rho_inv;  // sigma <=_L w0 rho^{-1}
    Perm top;            // sigma rho; top support term with coefficient 1 when nonzero
};

PiPibar pi_pibar(const Perm& sigma, const Perm& rho);

/// Echelonized basis of the left ideal H_n(0) x, with the companion data
/// needed to express further elements over it.
struct LeftIdeal {
    int n = 0;
    std::vector<HeckeElem> basis;             // RREF rows over the pi basis
    std::vector<std::vector<Rat>> basis_vec;  // coordinates, (length, lex) order
    std::vector<int> pivots;
    std::vector<Perm> index;                  // column order: all of S_n

    int dim() const { return static_cast<int>(basis.size()); }
    // Coordinates of x over the echelon basis; throws if x is outside.
    std::vector<Rat> coords(const HeckeElem& x) const;
};

LeftIdeal left_ideal_basis(const HeckeElem& x);

std::vector<HeckeElem> left_ideal_elements(const HeckeElem& x);  // {pi_g x : g}

}  // namespace bruhat
