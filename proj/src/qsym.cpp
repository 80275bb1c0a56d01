#include "bruhat/qsym.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bruhat {

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

Poly f_expand(const Composition& alpha, int k) {
    if (k < 1) throw std::invalid_argument("f_expand: k >= 1");
    Poly out;
    const int n = alpha.size();
    if (n == 0) {
        out[std::vector<int>(k, 0)] = 1;
        return out;
    }
    std::set<int> strict = alpha.to_set();
    // chains 1 <= i_1 <= ... <= i_n <= k with i_j < i_{j+1} when j in set(alpha)
    std::vector<int> chain(n);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == n) {
            std::vector<int> e(k, 0);
            for (int idx : chain) ++e[idx - 1];
            out[e] += 1;
            return;
        }
        for (int v = lo; v <= k; ++v) {
            chain[pos] = v;
            rec(pos + 1, strict.count(pos + 1) ? v + 1 : v);
        }
    };
    rec(0, 1);
    return out;
}

QSym QSym::fundamental(const Composition& alpha) {
    QSym q;
    q.coeffs_[alpha] = 1;
    return q;
}

QSym& QSym::add(const Composition& alpha, const Rat& c) {
    auto it = coeffs_.find(alpha);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

QSym QSym::operator+(const QSym& o) const {
    QSym out = *this;
    for (const auto& [a, c] : o.coeffs_) out.add(a, c);
    return out;
}

QSym QSym::operator-(const QSym& o) const {
    QSym out = *this;
    for (const auto& [a, c] : o.coeffs_) out.add(a, -c);
    return out;
}

QSym QSym::operator*(const Rat& c) const {
    QSym out;
    if (c == 0) return out;
    for (const auto& [a, v] : coeffs_) out.coeffs_[a] = v * c;
    return out;
}

std::string QSym::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : coeffs_) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (abs != 1) out += abs.get_str() + "*";
        out += "F[" + a.str() + "]";
    }
    return out;
}

std::string QSym::json() const {
    std::string out = "{\"F\":[";
    bool first = true;
    for (const auto& [a, c] : coeffs_) {
        if (!first) out += ",";
        first = false;
        out += "{\"comp\":[" + a.str() + "],\"coeff\":\"" + c.get_str() + "\"}";
    }
    out += "]}";
    return out;
}

namespace {

// Expand F_gamma for all gamma |= d in d variables and solve for the F-basis
// coordinates of a homogeneous degree-d quasisymmetric polynomial.
QSym decompose_in_f_basis(const Poly& p, int d) {
    if (d == 0) {
        QSym out;
        if (!p.empty()) out.add(Composition(), p.begin()->second);
        return out;
    }
    QSym out;
    Poly rest = p;
    // Unitriangularity: the exponent vector (gamma_1, gamma_2, ..., 0, ...)
    // occurs in F_delta only when delta refines... iterate compositions by
    // decreasing length so the leading monomial of each F is peeled last.
    // Simpler and safe: peel by the lexicographically largest remaining
    // monomial, whose exponents read off a composition directly.
    while (!rest.empty()) {
        // largest exponent vector in lex order has the indices packed left
        auto it = std::prev(rest.end());
        const std::vector<int>& e = it->first;
        std::vector<int> parts;
        for (int v : e) {
            if (v == 0) break;
            parts.push_back(v);
        }
        int total = 0;
        for (int v : parts) total += v;
        if (total != d) throw std::logic_error("decompose_in_f_basis: not quasisymmetric");
        Composition gamma{parts};
        mpz_class c = it->second;
        Poly f = f_expand(gamma, d);
        for (const auto& [ef, cf] : f) {
            auto jt = rest.find(ef);
            mpz_class nv = (jt == rest.end() ? mpz_class(0) : jt->second) - c * cf;
            if (nv == 0) {
                if (jt != rest.end()) rest.erase(jt);
            } else {
                rest[ef] = nv;
            }
        }
        out.add(gamma, Rat(c));
    }
    return out;
}

std::map<std::pair<Composition, Composition>, QSym>& product_cache() {
    static std::map<std::pair<Composition, Composition>, QSym> cache;
    return cache;
}

std::mutex& product_mutex() {
    static std::mutex m;
    return m;
}

QSym f_product_basis(const Composition& a, const Composition& b) {
    if (a.size() == 0) return QSym::fundamental(b);
    if (b.size() == 0) return QSym::fundamental(a);
    {
        std::lock_guard<std::mutex> lock(product_mutex());
        auto it = product_cache().find({a, b});
        if (it != product_cache().end()) return it->second;
    }
    const int d = a.size() + b.size();
    Poly p = poly_mul(f_expand(a, d), f_expand(b, d));
    QSym out = decompose_in_f_basis(p, d);
    std::lock_guard<std::mutex> lock(product_mutex());
    product_cache().emplace(std::make_pair(a, b), out);
    return out;
}

}  // namespace

QSym f_product(const QSym& a, const QSym& b) {
    QSym out;
    for (const auto& [ca, va] : a.coeffs())
        for (const auto& [cb, vb] : b.coeffs()) {
            QSym term = f_product_basis(ca, cb);
            out = out + term * (va * vb);
        }
    return out;
}

QSym qsym_automorphism(const QSym& x, QSymAuto which) {
    QSym out;
    for (const auto& [a, c] : x.coeffs()) {
        Composition img;
        switch (which) {
            case QSymAuto::Psi: img = a.complement(); break;
            case QSymAuto::Rho: img = a.reverse(); break;
            case QSymAuto::Omega: img = a.transpose(); break;
        }
        out.add(img, c);
    }
    return out;
}

}  // namespace bruhat
