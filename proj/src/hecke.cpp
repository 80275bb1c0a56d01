#include "bruhat/hecke.hpp"

#include <stdexcept>

namespace bruhat {

Perm pi_mul_basis(const Perm& sigma, const Perm& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("pi_mul_basis: size mismatch");
    Perm acc = sigma;
    for (int i : tau.reduced_word())
        if (!acc.has_descent(Side::Right, i)) acc = acc.rmul_s(i);
    return acc;
}

HeckeElem HeckeElem::basis(const Perm& p) {
    HeckeElem e(p.size());
    e.terms_.emplace(p, 1);
    return e;
}

HeckeElem& HeckeElem::add(const Perm& p, const Rat& c) {
    if (c == 0) return *this;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

HeckeElem HeckeElem::operator+(const HeckeElem& o) const {
    HeckeElem out = *this;
    for (const auto& [p, c] : o.terms_) out.add(p, c);
    return out;
}

HeckeElem HeckeElem::operator-(const HeckeElem& o) const {
    HeckeElem out = *this;
    for (const auto& [p, c] : o.terms_) out.add(p, -c);
    return out;
}

HeckeElem HeckeElem::operator*(const Rat& c) const {
    HeckeElem out(n_);
    if (c == 0) return out;
    for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
    return out;
}

HeckeElem HeckeElem::lmul_pi(int i) const {
    HeckeElem out(n_);
    for (const auto& [p, c] : terms_)
        out.add(p.has_descent(Side::Left, i) ? p : p.lmul_s(i), c);
    return out;
}

HeckeElem HeckeElem::rmul_pi(int i) const {
    HeckeElem out(n_);
    for (const auto& [p, c] : terms_)
        out.add(p.has_descent(Side::Right, i) ? p : p.rmul_s(i), c);
    return out;
}

std::string HeckeElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (abs != 1) out += abs.get_str() + "*";
        out += "\xCF\x80[" + p.str() + "]";
    }
    return out;
}

std::string HeckeElem::json() const {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        if (!first) out += ",";
        first = false;
        out += "{\"perm\":\"" + p.str() + "\",\"coeff\":\"" + c.get_str() + "\"}";
    }
    out += "]}";
    return out;
}

HeckeElem mul(const HeckeElem& a, const HeckeElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mul: size mismatch");
    HeckeElem out(a.n());
    for (const auto& [s, cs] : a.terms())
        for (const auto& [t, ct] : b.terms()) out.add(pi_mul_basis(s, t), cs * ct);
    return out;
}

HeckeElem pibar_of(const Perm& sigma) {
    HeckeElem acc = HeckeElem::one(sigma.size());
    for (int i : sigma.reduced_word()) acc = acc.rmul_pi(i) - acc;
    return acc;
}

PiPibar pi_pibar(const Perm& sigma, const Perm& rho) {
    PiPibar out{HeckeElem::zero(sigma.size()), false, false, false, compose(sigma, rho)};
    HeckeElem x = HeckeElem::basis(sigma);
    for (int i : rho.reduced_word()) x = x.rmul_pi(i) - x;
    out.value = x;
    out.nonzero = !x.is_zero();
    out.length_additive = out.top.length() == sigma.length() + rho.length();
    Perm w0rhoinv = compose(Perm::longest(sigma.size()), rho.inverse());
    out.below_w0_rho_inv =
        sigma.length() <= w0rhoinv.length() &&
        w0rhoinv.length() == sigma.length() + compose(w0rhoinv, sigma.inverse()).length();
    return out;
}

std::vector<HeckeElem> left_ideal_elements(const HeckeElem& x) {
    std::vector<HeckeElem> out;
    for (const Perm& g : all_perms(x.n())) {
        HeckeElem y = x;
        auto word = g.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = y.lmul_pi(*it);
        out.push_back(std::move(y));
    }
    return out;
}

LeftIdeal left_ideal_basis(const HeckeElem& x) {
    LeftIdeal ideal;
    ideal.n = x.n();
    ideal.index = all_perms(x.n());
    std::sort(ideal.index.begin(), ideal.index.end(), LenLex{});
    std::map<Perm, int, LenLex> col;
    for (std::size_t j = 0; j < ideal.index.size(); ++j)
        col.emplace(ideal.index[j], static_cast<int>(j));
    const int dim = static_cast<int>(ideal.index.size());

    std::vector<std::vector<Rat>> rows;
    for (const HeckeElem& y : left_ideal_elements(x)) {
        if (y.is_zero()) continue;
        std::vector<Rat> v(dim);
        for (const auto& [p, c] : y.terms()) v[col.at(p)] = c;
        rows.push_back(std::move(v));
    }
    // incremental echelonization
    std::vector<std::vector<Rat>> basis;
    std::vector<int> pivots;
    for (auto& v : rows) {
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]];
            for (int j = 0; j < dim; ++j) v[j] -= f * basis[r][j];
        }
        int p = -1;
        for (int j = 0; j < dim; ++j)
            if (v[j] != 0) { p = j; break; }
        if (p < 0) continue;
        Rat inv = 1 / v[p];
        for (int j = 0; j < dim; ++j) v[j] *= inv;
        // back-substitute into existing rows
        for (std::size_t r = 0; r < basis.size(); ++r) {
            if (basis[r][p] == 0) continue;
            Rat f = basis[r][p];
            for (int j = 0; j < dim; ++j) basis[r][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
    }
    // sort rows by pivot for a canonical RREF
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    for (std::size_t i : order) {
        ideal.basis_vec.push_back(basis[i]);
        ideal.pivots.push_back(pivots[i]);
        HeckeElem e(ideal.n);
        for (int j = 0; j < dim; ++j)
            if (basis[i][j] != 0) e.add(ideal.index[j], basis[i][j]);
        ideal.basis.push_back(std::move(e));
    }
    return ideal;
}

std::vector<Rat> LeftIdeal::coords(const HeckeElem& x) const {
    const int dim = static_cast<int>(index.size());
    std::map<Perm, int, LenLex> col;
    for (int j = 0; j < dim; ++j) col.emplace(index[j], j);
    std::vector<Rat> v(dim);
    for (const auto& [p, c] : x.terms()) v[col.at(p)] = c;
    std::vector<Rat> out(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        Rat c = v[pivots[r]];
        out[r] = c;
        if (c == 0) continue;
        for (int j = 0; j < dim; ++j) v[j] -= c * basis_vec[r][j];
    }
    for (const Rat& rem : v)
        if (rem != 0) throw std::domain_error("LeftIdeal::coords: element outside ideal");
    return out;
}

}  // namespace bruhat
