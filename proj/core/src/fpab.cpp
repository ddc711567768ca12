#include "ktl/fpab.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ktl/errors.hpp"

namespace ktl {

std::string InvariantFactors::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? " " : "") << torsion[i];
    os << "] free " << free_rank;
    return os.str();
}

struct Group::Data {
    std::size_t gens;
    IntMatrix relations;
    HermiteForm hnf;
    InvariantFactors inv;
};

Group Group::make(std::size_t gens, IntMatrix relations) {
    if (relations.rows() == 0) relations = IntMatrix(0, gens);
    assert(relations.cols() == gens);
    auto d = std::make_shared<Data>();
    d->gens = gens;
    d->hnf = hermite_normal_form(relations);
    // Keep the canonical HNF rows as the stored presentation; it is the same
    // lattice and keeps all later row scans small.
    d->relations = d->hnf.h.submatrix(0, 0, d->hnf.rank, gens);
    d->hnf = hermite_normal_form(d->relations);
    SmithForm s = smith_normal_form(d->relations);
    for (const Int& x : s.diag)
        if (x > 1) d->inv.torsion.push_back(x);
    d->inv.free_rank = gens - s.rank;
    return Group(std::move(d));
}

Group Group::free_abelian(std::size_t n) { return make(n, IntMatrix(0, n)); }

Group Group::cyclic(const Int& n) {
    IntMatrix r(1, 1);
    r.at(0, 0) = n;
    return make(1, std::move(r));
}

Group Group::trivial() { return make(0, IntMatrix(0, 0)); }

Group Group::diagonal(const std::vector<Int>& orders) {
    IntMatrix r(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r.at(i, i) = orders[i];
    return make(orders.size(), std::move(r));
}

std::size_t Group::gens() const { return d_->gens; }
const IntMatrix& Group::relations() const { return d_->relations; }
const HermiteForm& Group::relation_hnf() const { return d_->hnf; }
const InvariantFactors& Group::invariant_factors() const { return d_->inv; }

bool Group::is_trivial() const { return d_->inv.torsion.empty() && d_->inv.free_rank == 0; }

std::optional<Int> Group::order() const {
    if (d_->inv.free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& t : d_->inv.torsion) n *= t;
    return n;
}

Int Group::exponent() const {
    if (d_->inv.free_rank > 0) return 0;
    return d_->inv.torsion.empty() ? Int(1) : d_->inv.torsion.back();
}

bool Group::in_relation_lattice(std::span<const Int> v) const { return d_->hnf.contains(v); }

std::vector<Int> Group::reduce(std::span<const Int> v) const { return d_->hnf.reduce(v); }

bool Group::elements_equal(std::span<const Int> a, std::span<const Int> b) const {
    return in_relation_lattice(sub_vec(a, b));
}

bool Group::element_is_zero(std::span<const Int> a) const { return in_relation_lattice(a); }

bool GroupElement::operator==(const GroupElement& o) const {
    return group.elements_equal(coords, o.coords);
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    return {group, add_vec(coords, o.coords)};
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
    return {group, sub_vec(coords, o.coords)};
}

GroupElement GroupElement::operator-() const { return {group, scale_vec(coords, Int(-1))}; }

GroupElement GroupElement::scaled(const Int& c) const { return {group, scale_vec(coords, c)}; }

Hom Hom::make(Group source, Group target, IntMatrix matrix) {
    assert(matrix.rows() == source.gens() && matrix.cols() == target.gens());
    const IntMatrix& rel = source.relations();
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        std::vector<Int> img = matrix.apply_row(rel.row(i));
        if (!target.in_relation_lattice(img))
            throw NotWellDefined(i, "hom does not respect source relation " + std::to_string(i));
    }
    Hom h;
    h.src_ = std::move(source);
    h.dst_ = std::move(target);
    h.mat_ = std::move(matrix);
    return h;
}

Hom Hom::identity(const Group& g) { return make(g, g, IntMatrix::identity(g.gens())); }

Hom Hom::zero(Group source, Group target) {
    std::size_t r = source.gens(), c = target.gens();
    return make(std::move(source), std::move(target), IntMatrix(r, c));
}

Hom Hom::mult(const Group& g, const Int& n) { return make(g, g, IntMatrix::scalar(g.gens(), n)); }

std::vector<Int> Hom::apply(std::span<const Int> x) const { return mat_.apply_row(x); }

GroupElement Hom::apply(const GroupElement& x) const { return {dst_, mat_.apply_row(x.coords)}; }

Hom Hom::then(const Hom& g) const {
    assert(dst_.gens() == g.src_.gens());
    return make(src_, g.dst_, mat_ * g.mat_);
}

Hom Hom::operator+(const Hom& g) const { return make(src_, dst_, mat_ + g.mat_); }
Hom Hom::operator-(const Hom& g) const { return make(src_, dst_, mat_ - g.mat_); }
Hom Hom::operator-() const { return make(src_, dst_, -mat_); }
Hom Hom::scaled(const Int& c) const { return make(src_, dst_, mat_.scaled(c)); }

bool Hom::is_zero_map() const {
    for (std::size_t i = 0; i < mat_.rows(); ++i)
        if (!dst_.in_relation_lattice(mat_.row(i))) return false;
    return true;
}

bool Hom::equals(const Hom& g) const {
    assert(mat_.rows() == g.mat_.rows() && mat_.cols() == g.mat_.cols());
    return (*this - g).is_zero_map();
}

SubgroupResult subgroup(const Group& g, const IntMatrix& generator_rows) {
    assert(generator_rows.cols() == g.gens());
    // Relations between the chosen generators: coefficient vectors c with
    // c * rows lying in the relation lattice of g.
    IntMatrix stacked = generator_rows.vstack(g.relations());
    IntMatrix ker = left_kernel(stacked);
    IntMatrix rel = ker.submatrix(0, 0, ker.rows(), generator_rows.rows());
    Group s = Group::make(generator_rows.rows(), std::move(rel));
    Hom inc = Hom::make(s, g, generator_rows);
    return {std::move(s), std::move(inc)};
}

QuotientResult quotient(const Group& g, const IntMatrix& extra_relations) {
    assert(extra_relations.cols() == g.gens());
    Group q = Group::make(g.gens(), g.relations().vstack(extra_relations));
    Hom proj = Hom::make(g, q, IntMatrix::identity(g.gens()));
    return {std::move(q), std::move(proj)};
}

SubgroupResult kernel(const Hom& h) {
    // x with x*M in the target lattice: left kernel of [M; R_target],
    // projected onto the x block.
    IntMatrix stacked = h.matrix().vstack(h.target().relations());
    IntMatrix ker = left_kernel(stacked);
    IntMatrix pre = ker.submatrix(0, 0, ker.rows(), h.source().gens());
    // Canonicalize the preimage lattice; its rows generate the kernel.
    HermiteForm f = hermite_normal_form(pre);
    IntMatrix rows = f.h.submatrix(0, 0, f.rank, h.source().gens());
    return subgroup(h.source(), rows);
}

QuotientResult cokernel(const Hom& h) { return quotient(h.target(), h.matrix()); }

SubgroupResult image(const Hom& h) {
    HermiteForm f = hermite_normal_form(h.matrix());
    IntMatrix rows = f.h.submatrix(0, 0, f.rank, h.target().gens());
    return subgroup(h.target(), rows);
}

SumResult direct_sum(const std::vector<Group>& gs) {
    std::size_t gens = 0, rels = 0;
    for (const Group& g : gs) {
        gens += g.gens();
        rels += g.relations().rows();
    }
    IntMatrix rel(rels, gens);
    std::size_t go = 0, ro = 0;
    for (const Group& g : gs) {
        const IntMatrix& r = g.relations();
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) rel.at(ro + i, go + j) = r.at(i, j);
        go += g.gens();
        ro += r.rows();
    }
    SumResult out;
    out.group = Group::make(gens, std::move(rel));
    go = 0;
    for (const Group& g : gs) {
        IntMatrix in(g.gens(), gens), pr(gens, g.gens());
        for (std::size_t j = 0; j < g.gens(); ++j) {
            in.at(j, go + j) = 1;
            pr.at(go + j, j) = 1;
        }
        out.inject.push_back(Hom::make(g, out.group, std::move(in)));
        out.project.push_back(Hom::make(out.group, g, std::move(pr)));
        go += g.gens();
    }
    return out;
}

TensorResult tensor_z(const Group& a, const Group& b) {
    std::size_t na = a.gens(), nb = b.gens();
    const IntMatrix& ra = a.relations();
    const IntMatrix& rb = b.relations();
    IntMatrix rel(ra.rows() * nb + na * rb.rows(), na * nb);
    std::size_t r = 0;
    for (std::size_t i = 0; i < ra.rows(); ++i)
        for (std::size_t j = 0; j < nb; ++j, ++r)
            for (std::size_t k = 0; k < na; ++k) rel.at(r, k * nb + j) = ra.at(i, k);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < rb.rows(); ++j, ++r)
            for (std::size_t k = 0; k < nb; ++k) rel.at(r, i * nb + k) = rb.at(j, k);
    TensorResult t;
    t.group = Group::make(na * nb, std::move(rel));
    t.left = a;
    t.right = b;
    return t;
}

std::vector<Int> TensorResult::pure(std::span<const Int> a, std::span<const Int> b) const {
    std::size_t na = left.gens(), nb = right.gens();
    assert(a.size() == na && b.size() == nb);
    std::vector<Int> v(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) v[i * nb + j] = a[i] * b[j];
    }
    return v;
}

PullbackResult fiber_product(const Hom& f, const Hom& g) {
    assert(f.target().gens() == g.target().gens());
    SumResult xy = direct_sum({f.source(), g.source()});
    Hom d = xy.project[0].then(f) - xy.project[1].then(g);
    SubgroupResult k = kernel(d);
    PullbackResult out;
    out.group = k.group;
    out.into_sum = k.inclusion;
    out.p1 = k.inclusion.then(xy.project[0]);
    out.p2 = k.inclusion.then(xy.project[1]);
    return out;
}

SubgroupResult torsion_part(const Group& g, const Int& n) {
    assert(n >= 1);
    return kernel(Hom::mult(g, n));
}

std::optional<std::vector<Int>> express_in_subgroup(const SubgroupResult& s, std::span<const Int> v) {
    // Solve c * [rows; relations] = v; the c block over the rows gives the
    // subgroup coordinates.
    IntMatrix stacked = s.inclusion.matrix().vstack(s.inclusion.target().relations());
    auto sol = solve_left(stacked, v);
    if (!sol) return std::nullopt;
    return std::vector<Int>(sol->begin(), sol->begin() + s.group.gens());
}

Hom factor_through_subgroup(const SubgroupResult& s, const Hom& q) {
    assert(q.target().gens() == s.inclusion.target().gens());
    IntMatrix m(q.source().gens(), s.group.gens());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto c = express_in_subgroup(s, q.matrix().row(i));
        if (!c) throw Error("factor_through_subgroup: image not contained in subgroup");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = (*c)[j];
    }
    return Hom::make(q.source(), s.group, std::move(m));
}

Hom restrict_endo(const SubgroupResult& s, const Hom& endo) {
    return factor_through_subgroup(s, s.inclusion.then(endo));
}

bool is_isomorphism(const Hom& h) {
    if (!(h.source().invariant_factors() == h.target().invariant_factors())) return false;
    if (!cokernel(h).group.is_trivial()) return false;
    return kernel(h).group.is_trivial();
}

Hom inverse(const Hom& h) {
    IntMatrix stacked = h.matrix().vstack(h.target().relations());
    IntMatrix m(h.target().gens(), h.source().gens());
    for (std::size_t i = 0; i < h.target().gens(); ++i) {
        std::vector<Int> e(h.target().gens());
        e[i] = 1;
        auto sol = solve_left(stacked, e);
        if (!sol) throw NotIso("inverse: generator " + std::to_string(i) + " has no preimage");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = (*sol)[j];
    }
    Hom inv = Hom::make(h.target(), h.source(), std::move(m));
    if (!h.then(inv).equals(Hom::identity(h.source())) ||
        !inv.then(h).equals(Hom::identity(h.target())))
        throw NotIso("inverse: candidate is not a two-sided inverse");
    return inv;
}

}  // namespace ktl
