#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/comp.hpp"
#include "bruhat/hecke.hpp"
#include "bruhat/hmod.hpp"
#include "bruhat/weak_order.hpp"

namespace bruhat {

enum class Variant { Plain, Bar };

/// B(sigma,rho) / Bbar(sigma,rho): the interval together with its monomial
/// (resp. signed) H_n(0)-module on the (rank, lex) vertex basis.
struct IntervalModule {
    Interval iv;
    HModule mod;
    Variant variant = Variant::Plain;
};

IntervalModule build(const Perm& sigma, const Perm& rho, Variant v = Variant::Plain);

IntervalModule projective(const Composition& alpha);   // P_alpha
IntervalModule irreducible(const Composition& alpha);  // F_alpha

// P_[[alpha]] = H_n(0) pi_{w0([[alpha]]^c)} pibar_{w0([[alpha]])} as a module
// on the echelonized ideal basis.
HModule projective_gc(const GeneralizedComposition& ga);

// Left-ideal module of H_n(0) x on the echelon basis of left_ideal_basis.
HModule ideal_module(const LeftIdeal& ideal);

struct EmbedResult {
    LeftIdeal ideal;
    std::vector<HeckeElem> images;  // per interval vertex
    ModuleMap map;                  // onto ideal_module(ideal)
    bool verified = false;
};

// gamma -> pi_gamma pibar_{rho^{-1} w0} (plain) or pibar_gamma pi_{rho^{-1} w0}
// (bar); the result carries the ideal and the verified intertwiner.
EmbedResult embed(const IntervalModule& m);

struct InducedModule {
    HModule mod;  // basis: (delta, u, v), delta lex over minimal reps
    std::vector<Perm> reps;
    int dim_left = 0;
    int dim_right = 0;
};

// Generic induction H_{m+n}(0) tensor_{H_m(0) (x) H_n(0)} (M (x) N).
InducedModule induce(const HModule& m, const HModule& n);

struct InductionProduct {
    InducedModule induced;
    IntervalModule target;  // B(sigma*sigma', rho (x)star rho')
    ModuleMap map;          // the explicit L: pi_delta (x) (g (x) g') -> delta(g*g')
    bool verified = false;
};

InductionProduct induction_product(const IntervalModule& m, const IntervalModule& n);

struct RestrictionSummand {
    RestrictionBlock block;
    IntervalModule left;   // B((sigma_J)_{<=m}, (rho^J)_{<=m})
    IntervalModule right;  // B((sigma_J)_{>m}, (rho^J)_{>m})
};

struct RestrictionResult {
    std::vector<RestrictionSummand> summands;
    BiModule assembled;  // direct sum of tensor pairs in J order
    RatMat map;          // vertex bijection from restrict_at(M,m) onto assembled
    bool verified = false;
};

RestrictionResult restriction(const IntervalModule& m, int seam);

bool mackey_check(const Perm& sigma, const Perm& rho, const Perm& sigma2,
                  const Perm& rho2, int k, std::string* detail = nullptr);

enum class Twist { Phi, Theta, Omega, Chi, PhiHat, ThetaHat, OmegaHat };

Twist twist_from_name(const std::string& name);
std::string twist_name(Twist t);
bool twist_is_anti(Twist t);

// The twisted module: automorphisms replace A_i by the matrix of the image of
// pi_i; anti-automorphisms act on the dual with transposed matrices.
HModule twist_module(const HModule& m, Twist t);

struct TwistCell {
    Twist twist;
    Variant in_variant;
    Variant out_variant;
    Perm out_sigma;
    Perm out_rho;
    ModuleMap map;  // certificate from twist_module(build(in)) onto build(out)
    bool verified = false;
};

// Verifies one Table-1 cell via the composite of the explicit maps f1/f2/f3.
TwistCell twist_cell(const Perm& sigma, const Perm& rho, Variant v, Twist t);

// All 14 cells for one comparable pair.
bool twist_table_check(const Perm& sigma, const Perm& rho, std::string* detail = nullptr);

// Table 2 on F_alpha and P_alpha.
bool twist_table2_check(const Composition& alpha, std::string* detail = nullptr);

// iota: B(sigma',rho) -> B(sigma,rho) and pr: B(sigma,rho) -> B(sigma,rho').
ModuleMap sub_map(const Perm& sigma, const Perm& rho, const Perm& sigma2);
ModuleMap quot_map(const Perm& sigma, const Perm& rho, const Perm& rho2);

// (A1)-(A3), (B1)-(B3) on one instance (certificates found by the solver).
bool twist_functoriality_instance(const Perm& s1, const Perm& r1, const Perm& s2,
                                  const Perm& r2, std::string* detail = nullptr);

}  // namespace bruhat
