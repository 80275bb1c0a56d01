#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "bruhat/comp.hpp"

namespace bruhat {

using Rat = mpq_class;

/// Exact multivariate polynomial with integer coefficients, used as the
/// oracle realizing products of fundamental quasisymmetric functions.
/// Keys are exponent vectors of a fixed variable count.
using Poly = std::map<std::vector<int>, mpz_class>;

Poly poly_mul(const Poly& a, const Poly& b);

// Truncated expansion of F_alpha in k variables.
Poly f_expand(const Composition& alpha, int k);

/// A finite linear combination of fundamental quasisymmetric functions.
class QSym {
public:
    QSym() = default;
    static QSym fundamental(const Composition& alpha);  // F_alpha
    static QSym one() { return fundamental(Composition()); }

    const std::map<Composition, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    QSym& add(const Composition& alpha, const Rat& c);

    QSym operator+(const QSym& o) const;
    QSym operator-(const QSym& o) const;
    QSym operator*(const Rat& c) const;

    bool operator==(const QSym& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;   // "F[3,2] + 2*F[1,1,3]"
    std::string json() const;  // {"F":[{"comp":[3,2],"coeff":"1"}]}

private:
    std::map<Composition, Rat> coeffs_;
};

// Product in the F basis, computed through the polynomial-expansion oracle;
// results are cached per homogeneous pair.
QSym f_product(const QSym& a, const QSym& b);

enum class QSymAuto { Psi, Rho, Omega };

// Linear extension of F_alpha -> F_{alpha^c} (psi), F_{alpha^r} (rho),
// F_{alpha^t} (omega).
QSym qsym_automorphism(const QSym& x, QSymAuto which);

}  // namespace bruhat
