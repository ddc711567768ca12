#include "ktl/poly.hpp"

#include <cassert>
#include <sstream>

namespace ktl {

Monomial Monomial::var(std::size_t i, std::uint32_t e) {
    Monomial m;
    if (e == 0) return m;
    m.exps.assign(i + 1, 0);
    m.exps[i] = e;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = exp(i) + o.exp(i);
    return r;
}

Monomial Monomial::divided_by_var(std::size_t i) const {
    assert(exp(i) > 0);
    Monomial r = *this;
    r.exps[i] -= 1;
    r.trim();
    return r;
}

void Monomial::trim() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

MPoly::MPoly(const Int& c) {
    if (c != 0) t_[Monomial::one()] = c;
}

MPoly MPoly::var(std::size_t i, std::uint32_t e) { return term(Int(1), Monomial::var(i, e)); }

MPoly MPoly::term(const Int& c, Monomial m) {
    MPoly p;
    if (c != 0) {
        m.trim();
        p.t_[std::move(m)] = c;
    }
    return p;
}

std::uint64_t MPoly::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

void MPoly::add_term(const Int& c, Monomial m) {
    if (c == 0) return;
    m.trim();
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(c, m);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(-c, m);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) r.add_term(c1 * c2, m1 * m2);
    return r;
}

MPoly MPoly::operator*(const Int& c) const {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_[m] = k * c;
    return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
    MPoly r(Int(1));
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        std::uint32_t e = m.exp(var);
        if (e == 0) continue;
        r.add_term(c * e, m.divided_by_var(var));
    }
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        MPoly t(c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            assert(i < images.size());
            t = t * images[i].pow(m.exps[i]);
        }
        r = r + t;
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& vars) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs_int(c);
        bool printed = false;
        if (a != 1 || m.exps.empty()) {
            os << a;
            printed = true;
        }
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (printed) os << "*";
            os << (i < vars.size() ? vars[i] : "v" + std::to_string(i));
            if (m.exps[i] > 1) os << "^" << m.exps[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace ktl
