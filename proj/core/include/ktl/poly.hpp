#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ktl/integers.hpp"

namespace ktl {

// Exponent vector; trailing zeros are trimmed so that monomials compare
// independently of the ambient variable count.
struct Monomial {
    std::vector<std::uint32_t> exps;

    static Monomial one() { return {}; }
    static Monomial var(std::size_t i, std::uint32_t e = 1);

    std::uint32_t exp(std::size_t i) const { return i < exps.size() ? exps[i] : 0; }
    std::uint64_t degree() const;
    Monomial operator*(const Monomial& o) const;
    // Divide by var i (exponent must be positive).
    Monomial divided_by_var(std::size_t i) const;
    void trim();

    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial with integer coefficients; the term map is ordered, so
// iteration order is deterministic.
class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(const Int& c);
    static MPoly var(std::size_t i, std::uint32_t e = 1);
    static MPoly term(const Int& c, Monomial m);

    bool is_zero() const { return t_.empty(); }
    const std::map<Monomial, Int>& terms() const { return t_; }
    std::uint64_t degree() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Int& c) const;
    MPoly pow(std::uint64_t e) const;
    bool operator==(const MPoly& o) const = default;

    MPoly derivative(std::size_t var) const;
    // Simultaneous substitution variable i -> images[i].
    MPoly substitute(const std::vector<MPoly>& images) const;

    void add_term(const Int& c, Monomial m);
    std::string str(const std::vector<std::string>& vars) const;

  private:
    std::map<Monomial, Int> t_;
};

}  // namespace ktl
