#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktl/int_matrix.hpp"

namespace ktl {

// Invariant-factor decomposition: torsion factors > 1 with d_i | d_{i+1},
// plus the rank of the free part.  Two groups are isomorphic iff these agree.
struct InvariantFactors {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;
    bool operator==(const InvariantFactors&) const = default;
    std::string str() const;
};

// Finitely presented abelian group Z^gens / (row lattice of `relations`).
// Immutable after construction; cheap to copy (shared state).
class Group {
  public:
    Group() : Group(trivial()) {}

    static Group make(std::size_t gens, IntMatrix relations);
    static Group free_abelian(std::size_t n);
    static Group cyclic(const Int& n);  // Z/n, n = 0 gives Z
    static Group trivial();
    static Group diagonal(const std::vector<Int>& orders);  // order 0 = free

    std::size_t gens() const;
    const IntMatrix& relations() const;
    const HermiteForm& relation_hnf() const;

    const InvariantFactors& invariant_factors() const;
    std::size_t free_rank() const { return invariant_factors().free_rank; }
    bool is_trivial() const;
    // Number of elements for finite groups.
    std::optional<Int> order() const;
    // Smallest n > 0 with n*x = 0 for all x, or 0 if no such n.
    Int exponent() const;

    bool in_relation_lattice(std::span<const Int> v) const;
    std::vector<Int> reduce(std::span<const Int> v) const;
    bool elements_equal(std::span<const Int> a, std::span<const Int> b) const;
    bool element_is_zero(std::span<const Int> a) const;

    bool same_presentation(const Group& o) const { return d_ == o.d_; }

  private:
    struct Data;
    explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// An element carried by its generator coordinates.
struct GroupElement {
    Group group;
    std::vector<Int> coords;

    bool is_zero() const { return group.element_is_zero(coords); }
    bool operator==(const GroupElement& o) const;
    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement scaled(const Int& c) const;
};

// Homomorphism between presented groups, as a (source gens x target gens)
// integer matrix acting on coordinate rows.  Construction verifies that every
// source relation lands in the target relation lattice and throws
// NotWellDefined otherwise.
class Hom {
  public:
    Hom() = default;
    static Hom make(Group source, Group target, IntMatrix matrix);
    static Hom identity(const Group& g);
    static Hom zero(Group source, Group target);
    static Hom mult(const Group& g, const Int& n);  // multiplication by n

    const Group& source() const { return src_; }
    const Group& target() const { return dst_; }
    const IntMatrix& matrix() const { return mat_; }

    std::vector<Int> apply(std::span<const Int> x) const;
    GroupElement apply(const GroupElement& x) const;

    // Composition in diagram order: (*this), then g.
    Hom then(const Hom& g) const;
    Hom operator+(const Hom& g) const;
    Hom operator-(const Hom& g) const;
    Hom operator-() const;
    Hom scaled(const Int& c) const;

    bool is_zero_map() const;
    bool equals(const Hom& g) const;  // same source/target presentations assumed

  private:
    Group src_, dst_;
    IntMatrix mat_;
};

struct SubgroupResult {
    Group group;
    Hom inclusion;
};

struct QuotientResult {
    Group group;
    Hom projection;
};

struct SumResult {
    Group group;
    std::vector<Hom> inject;
    std::vector<Hom> project;
};

struct TensorResult {
    Group group;  // generators are pairs (i,j), i major
    Group left, right;
    std::vector<Int> pure(std::span<const Int> a, std::span<const Int> b) const;
};

struct PullbackResult {
    Group group;
    Hom p1, p2;
    Hom into_sum;  // inclusion into X (+) Y
};

// Subgroup of g generated by the given coordinate rows; the presentation's
// generators are exactly those rows.
SubgroupResult subgroup(const Group& g, const IntMatrix& generator_rows);

QuotientResult quotient(const Group& g, const IntMatrix& extra_relations);

SubgroupResult kernel(const Hom& h);
QuotientResult cokernel(const Hom& h);
SubgroupResult image(const Hom& h);

SumResult direct_sum(const std::vector<Group>& gs);
TensorResult tensor_z(const Group& a, const Group& b);
PullbackResult fiber_product(const Hom& f, const Hom& g);
SubgroupResult torsion_part(const Group& g, const Int& n);

// Expresses an element of g (coordinates v) in the generators of a subgroup,
// if it lies in it.
std::optional<std::vector<Int>> express_in_subgroup(const SubgroupResult& s, std::span<const Int> v);

// Factor q through the subgroup inclusion s.inclusion (q's image must lie in
// the subgroup); result r satisfies r.then(s.inclusion) == q.
Hom factor_through_subgroup(const SubgroupResult& s, const Hom& q);

// Restriction of an endomorphism to an invariant subgroup.
Hom restrict_endo(const SubgroupResult& s, const Hom& endo);

bool is_isomorphism(const Hom& h);
// Inverse of an isomorphism.
Hom inverse(const Hom& h);

}  // namespace ktl
