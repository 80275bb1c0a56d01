#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/comp.hpp"
#include "bruhat/hmod.hpp"
#include "bruhat/interval_mod.hpp"

namespace bruhat {

enum class Family { SIT, SET, SPCT, SPYRT };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// A standard filling of a composition diagram. SPYRT fillings live on
/// tcd(alpha^r); the shape field always records alpha itself.
struct Tableau {
    Composition shape;
    std::vector<std::vector<int>> rows;  // rows[i][j] = entry at (i+1, j+1)
    Family family = Family::SIT;
    std::optional<Perm> type;            // for SPCT / SPYRT

    int size() const;
    // (row, col) of a value, 1-based; (-1,-1) when absent.
    std::pair<int, int> position_of(int value) const;
    Tableau swap_values(int i) const;    // exchange entries i and i+1

    std::string str() const;   // monospace box layout
    std::string json() const;

    bool operator==(const Tableau& o) const {
        return rows == o.rows && family == o.family;
    }
    bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Exhaustive generation, canonical order (row data lexicographic).
std::vector<Tableau> generate(Family f, const Composition& alpha,
                              const std::optional<Perm>& type = std::nullopt);

bool validate(const Tableau& t);

// Sources (fill rows left-to-right top-to-bottom) and the family-specific
// sinks, for SIT and SET.
std::pair<Tableau, Tableau> sources_sinks(Family f, const Composition& alpha);

// Right-to-left reading by rows, top row first (SIT/SET).
Perm read_word(const Tableau& t);

// D(tau): i such that i+1 lies weakly right of i (SPCT).
std::set<int> spct_descents(const Tableau& t);

// The SPYRT 0-Hecke action matrices on all of SPYRT^type(alpha).
HModule spyrt_module(const Composition& alpha, const Perm& type);

/// One ~ equivalence class of SPCT (columnwise relative orders), carrying the
/// transported monomial module and the strips of its source.
struct SpctClass {
    std::vector<Tableau> members;       // class basis order (SPCT side)
    std::vector<Tableau> spyrt_members; // partners under tau_T = n+1-T
    HModule mod;                        // monomial after sign normalization
    HModule spyrt_mod;                  // the SPYRT action on the partners
    int source = -1;
    int sink = -1;
    std::vector<int> ranks;             // graph distance from the source
    std::vector<std::vector<std::pair<int, int>>> strips;  // positions per strip
};

std::vector<SpctClass> spct_classes(const Composition& alpha, const Perm& type);

// Strip-wise reading of a class member against the class source's strips.
Perm tread(const SpctClass& cls, int member);

struct TheoremReport {
    bool ok = true;
    std::string detail;
};

// V_alpha / X_alpha are the interval modules on the read images: checks read
// injectivity, image = interval, and vertex-wise descent compatibility.
TheoremReport sit_set_theorem_check(Family f, const Composition& alpha);

// S^sigma_{alpha,E} ~ B(tread(tau_E), tread(tau'_E)) for every class, plus the
// SPYRT counterpart B(w0 tread(tau'_E), w0 tread(tau_E)).
TheoremReport spct_theorem_check(const Composition& alpha, const Perm& type);

// SPYRT action closure, relations, and the transport isomorphism W onto the
// omega-hat twist of the SPCT class modules.
TheoremReport spyrt_check(const Composition& alpha, const Perm& type);

// ch identities of the twist diagram on S^id_alpha.
TheoremReport character_diagram_check(const Composition& alpha);

}  // namespace bruhat
