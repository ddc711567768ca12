#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ktl/fpab.hpp"
#include "ktl/poly.hpp"

namespace ktl {

// Standing parameters: q = p^e with q > 2, and m >= e.
struct Params {
    long p = 0, e = 0, m = 0;

    static Params make(long p, long e, long m);
    long q() const;
    std::string str() const;
};

// epsilon(n) = m + e - i for the unique i with p^i <= n < p^{i+1}, 1 <= n < q.
long epsilon(const Params& pr, long n);

class Ring;

// Element of a presented ring; coordinates over the additive basis, always
// reduced modulo the additive orders.
struct RingElement {
    std::shared_ptr<const struct RingData> ring;
    std::vector<Int> c;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement scaled(const Int& k) const;
    RingElement pow(std::uint64_t e) const;
    bool operator==(const RingElement& o) const { return c == o.c; }
    bool is_zero() const;
    std::string str() const;
};

struct RingData {
    enum Kind { kLattice, kTensor, kDirect };
    Kind kind = kLattice;
    std::string name;
    std::vector<std::string> vars;
    std::vector<MPoly> relators;
    std::vector<Monomial> basis;  // empty for kDirect
    std::vector<std::string> basis_names;
    std::vector<Int> orders;  // 0 = infinite additive order
    std::vector<Int> one;
    // table[i][j]: coordinates of basis_i * basis_j
    std::vector<std::vector<std::vector<Int>>> table;
    Group additive;
    // kLattice: normal form of every monomial up to the construction bound
    std::map<Monomial, std::vector<Int>> nf;
    // kTensor
    std::shared_ptr<const RingData> left, right;
    std::size_t left_var_count = 0;
};

// Commutative ring, finite as a module over the integers, carried by an
// additive basis with orders and a multiplication table.  Immutable.
class Ring {
  public:
    Ring() = default;
    explicit Ring(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}

    const RingData& data() const { return *d_; }
    const std::shared_ptr<const RingData>& ptr() const { return d_; }

    std::size_t dim() const { return d_->basis.size(); }
    const std::vector<Int>& orders() const { return d_->orders; }
    const Group& additive() const { return d_->additive; }
    const std::string& name() const { return d_->name; }
    std::size_t var_count() const { return d_->vars.size(); }

    RingElement zero() const;
    RingElement one() const;
    RingElement element(std::vector<Int> coords) const;  // reduces
    RingElement basis_element(std::size_t i) const;
    RingElement var_element(std::size_t i) const;
    RingElement from_poly(const MPoly& p) const;
    RingElement from_int(const Int& n) const;

    std::vector<Int> reduce_coords(std::vector<Int> v) const;
    std::vector<Int> mul_coords(std::span<const Int> a, std::span<const Int> b) const;
    // Normal form of a polynomial in the presentation variables.
    std::vector<Int> reduce_poly(const MPoly& p) const;

    bool is_finite() const;
    Int cardinality() const;
    // All elements of a finite ring, coordinate tuples in lexicographic order.
    std::vector<std::vector<Int>> enumerate() const;

    bool same_ring(const Ring& o) const { return d_ == o.d_; }

  private:
    std::shared_ptr<const RingData> d_;
};

// Quotient ring Z[vars]/(relators) with a claimed additive basis and orders.
// The claim is validated against the Smith normal form of the relator lattice
// at a bounded degree (and once more at a larger bound, so the bound itself
// is certified); throws ValidationFailed when the claim does not hold.
Ring make_presented_ring(std::string name, std::vector<std::string> vars,
                         std::vector<MPoly> relators, std::vector<Monomial> claimed_basis,
                         std::vector<Int> claimed_orders, std::size_t degree_bound = 0);

Ring ring_integers();
Ring ring_truncated_poly(unsigned n);  // Z[x]/(x^n)
Ring ring_cyclic_group(unsigned r);    // Z[s]/(s^r - 1)
Ring ring_integers_mod(const Int& n);  // Z/n
Ring ring_dual_numbers_mod(const Int& n);  // (Z/n)[eps]/(eps^2)
Ring ring_product(const Ring& a, const Ring& b);

// Ideal with a computed additive basis (as a subgroup of the ring's additive
// group); closed under multiplication by the ring basis (checked).
class Ideal {
  public:
    Ideal() = default;
    static Ideal make(Ring ring, std::vector<RingElement> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<RingElement>& gens() const { return gens_; }
    const SubgroupResult& subgroup() const { return sub_; }
    const Group& group() const { return sub_.group; }
    std::size_t rank() const { return sub_.group.gens(); }

    bool contains(std::span<const Int> ring_coords) const;
    std::optional<std::vector<Int>> express(std::span<const Int> ring_coords) const;
    RingElement basis_element(std::size_t i) const;  // as a ring element
    bool is_zero_ideal() const { return sub_.group.is_trivial(); }

  private:
    Ring ring_;
    std::vector<RingElement> gens_;
    SubgroupResult sub_;
};

// Additive ring homomorphism determined by variable images; multiplicativity
// is verified on all basis pairs.
struct RingHom {
    Ring src, dst;
    IntMatrix mat;  // src basis -> dst coords

    Hom additive() const;
    RingElement apply(const RingElement& x) const;
};

RingHom ring_hom(const Ring& src, const Ring& dst, const std::vector<RingElement>& var_images);

// The group ring quotient B with its distinguished generator z and the
// augmentation ideal I = (z).  Construction is gated: the additive order of
// z^i must equal p^{epsilon(i)} and the free part must be exactly Z*1.
struct GroupRingB {
    Params params;
    Ring B;
    RingElement z;
    Ideal I;
    MPoly z_poly;
};

GroupRingB make_group_ring_B(const Params& pr);

// B/I^2 with the image ideal; gated on z having additive order p^e and
// z^2 = 0.
struct BModISquared {
    Params params;
    Ring B2;
    RingElement z;
    Ideal Ibar;
    RingHom proj;  // B -> B2
};

BModISquared quotient_by_ideal_square(const GroupRingB& b);

// Tensor product ring with embeddings of the two factors.
struct TensorRingResult {
    Ring ring;
    Ring left, right;
    std::vector<Int> embed_left(std::span<const Int> a) const;
    std::vector<Int> embed_right(std::span<const Int> b) const;
    std::vector<Int> pure(std::span<const Int> a, std::span<const Int> b) const;
};

TensorRingResult ring_tensor(const Ring& a, const Ring& b);

// A (x) I inside A (x) B.
Ideal ideal_tensor(const TensorRingResult& t, const Ideal& i_right);

// Module of Kahler differentials of W, presented on generators
// (basis monomial) * d(var) with relations m * d(relator) and the additive
// orders, together with the W-action and the universal derivation.
class Kahler {
  public:
    Kahler() = default;
    static Kahler make(const Ring& w);

    const Ring& ring() const { return w_; }
    const Group& group() const { return omega_; }
    const Hom& delta() const { return delta_; }
    std::size_t gen_index(std::size_t basis_k, std::size_t var_i) const;

    // w-action of a ring element on a differential.
    std::vector<Int> act(std::span<const Int> ring_coords, std::span<const Int> omega) const;
    const IntMatrix& basis_action(std::size_t k) const { return action_[k]; }
    // a * delta(b) as coordinates.
    std::vector<Int> symbol(const RingElement& a, const RingElement& b) const;
    std::vector<Int> dvar(std::size_t i) const;

    // Presentation on symbols (basis_i, basis_j) ~ b_i delta(b_j) with
    // bilinearity orders and the Leibniz family; returns the group and the
    // canonical map onto the variable presentation.
    struct SymbolPresentation {
        Group group;
        Hom to_variable_form;
    };
    SymbolPresentation symbol_presentation() const;

  private:
    Ring w_;
    Group omega_;
    Hom delta_;
    std::vector<IntMatrix> action_;
};

// (J (x)_Z Omega) / (a*w (x) omega - a (x) w*omega), with a pure-tensor
// constructor for classes a (x) omega.
struct ModuleTensorResult {
    Group group;  // generators (ideal basis index, omega gen index)
    Ideal ideal;
    Kahler omega;
    std::vector<Int> pure(std::span<const Int> ring_coords_in_ideal,
                          std::span<const Int> omega_coords) const;
};

ModuleTensorResult module_tensor_over_w(const Ideal& j, const Kahler& omega);

}  // namespace ktl
