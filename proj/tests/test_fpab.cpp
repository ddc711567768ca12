#include <doctest.h>

#include "ktl/errors.hpp"
#include "ktl/fpab.hpp"
#include "ktl/rng.hpp"

using namespace ktl;

namespace {

InvariantFactors inv(std::vector<Int> t, std::size_t f) { return {std::move(t), f}; }

Group random_group(Rng& rng) {
    std::size_t n = 1 + rng.below(3);
    std::size_t k = rng.below(4);
    IntMatrix rel(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rel.at(i, j) = rng.int_in(-6, 6);
    return Group::make(n, std::move(rel));
}

Hom random_hom(Rng& rng, int tries = 64) {
    while (true) {
        Group a = random_group(rng), b = random_group(rng);
        // Build a valid hom by sending each generator to a multiple of the
        // target exponent times a random vector plus a lattice adjustment;
        // simplest robust recipe: random matrix, retry until well defined.
        IntMatrix m(a.gens(), b.gens());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.int_in(-4, 4);
        try {
            return Hom::make(a, b, std::move(m));
        } catch (const NotWellDefined&) {
            if (--tries == 0) return Hom::identity(Group::cyclic(Int(2)));
        }
    }
}

}  // namespace

TEST_CASE("invariant factors: worked examples") {
    // relations {2e1, 3e2} on 2 generators -> Z/6
    Group g = Group::diagonal({Int(2), Int(3)});
    CHECK(g.invariant_factors() == inv({Int(6)}, 0));

    CHECK(Group::free_abelian(3).invariant_factors() == inv({}, 3));

    Group t = Group::cyclic(Int(1));
    CHECK(t.is_trivial());
    CHECK(t.invariant_factors() == inv({}, 0));
}

TEST_CASE("element equality is an equivalence respecting addition") {
    Group g = Group::diagonal({Int(4), Int(0)});
    GroupElement a{g, {Int(1), Int(2)}};
    GroupElement b{g, {Int(5), Int(2)}};
    GroupElement c{g, {Int(9), Int(2)}};
    CHECK(a == b);
    CHECK(b == c);
    CHECK(a == c);
    CHECK(!(a == GroupElement{g, {Int(2), Int(2)}}));
    CHECK(a + a == b + a - (b - a));
}

TEST_CASE("hom: worked examples") {
    Group z = Group::free_abelian(1);
    Hom id = Hom::identity(z);
    CHECK(id.apply(std::vector<Int>{Int(5)}) == std::vector<Int>{Int(5)});

    Group z2 = Group::cyclic(Int(2)), z4 = Group::cyclic(Int(4));
    IntMatrix bad{{Int(1)}};
    CHECK_THROWS_AS(Hom::make(z2, z4, bad), NotWellDefined);
    IntMatrix ok{{Int(2)}};
    Hom inj = Hom::make(z2, z4, ok);
    CHECK(kernel(inj).group.is_trivial());
}

TEST_CASE("kernel/cokernel/image: worked examples") {
    Group z = Group::free_abelian(1);
    Hom two = Hom::mult(z, Int(2));
    CHECK(kernel(two).group.is_trivial());
    CHECK(cokernel(two).group.invariant_factors() == inv({Int(2)}, 0));

    Hom zero = Hom::zero(z, z);
    CHECK(kernel(zero).group.invariant_factors() == inv({}, 1));
    CHECK(cokernel(zero).group.invariant_factors() == inv({}, 1));

    // (a,b) -> 2a+4b : image = 2Z, cokernel Z/2
    Group z2g = Group::free_abelian(2);
    Hom h = Hom::make(z2g, z, IntMatrix{{Int(2)}, {Int(4)}});
    CHECK(image(h).group.invariant_factors() == inv({}, 1));
    CHECK(cokernel(h).group.invariant_factors() == inv({Int(2)}, 0));
}

TEST_CASE("kernel inclusion satisfies the universal property pieces") {
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        Hom h = random_hom(rng);
        auto k = kernel(h);
        CHECK(k.inclusion.then(h).is_zero_map());
        // image(h) iso source/kernel(h)
        auto im = image(h);
        auto q = quotient(h.source(), k.inclusion.matrix());
        CHECK(im.group.invariant_factors() == q.group.invariant_factors());
        // exactness: cokernel projection kills exactly the image
        auto ck = cokernel(h);
        CHECK(h.then(ck.projection).is_zero_map());
    }
}

TEST_CASE("direct sum: examples and merge property") {
    Group a = Group::free_abelian(1), b = Group::cyclic(Int(2));
    auto s = direct_sum({a, b});
    CHECK(s.group.invariant_factors() == inv({Int(2)}, 1));

    CHECK(direct_sum({}).group.is_trivial());

    auto s2 = direct_sum({Group::cyclic(Int(2)), Group::cyclic(Int(3))});
    CHECK(s2.group.invariant_factors() == inv({Int(6)}, 0));

    // injections/projections compose to identity
    CHECK(s.inject[0].then(s.project[0]).equals(Hom::identity(a)));
    CHECK(s.inject[1].then(s.project[1]).equals(Hom::identity(b)));
    CHECK(s.inject[0].then(s.project[1]).is_zero_map());
}

TEST_CASE("tensor over Z: examples") {
    CHECK(tensor_z(Group::cyclic(Int(2)), Group::cyclic(Int(3))).group.is_trivial());

    Group g = Group::diagonal({Int(4), Int(0)});
    auto t = tensor_z(Group::free_abelian(1), g);
    CHECK(t.group.invariant_factors() == g.invariant_factors());

    auto t2 = tensor_z(Group::cyclic(Int(4)), Group::cyclic(Int(6)));
    CHECK(t2.group.invariant_factors() == inv({Int(2)}, 0));

    // pure tensors are bilinear
    GroupElement x{Group::cyclic(Int(4)), {Int(3)}};
    GroupElement y{Group::cyclic(Int(6)), {Int(5)}};
    auto v = t2.pure(x.coords, y.coords);
    CHECK(v == std::vector<Int>{Int(15)});
}

TEST_CASE("fiber product: examples") {
    Group z = Group::free_abelian(1), z2 = Group::cyclic(Int(2));
    Hom red = Hom::make(z, z2, IntMatrix{{Int(1)}});

    // pullback of an isomorphism is an isomorphism
    Hom idz = Hom::identity(z);
    auto pb = fiber_product(idz, idz);
    CHECK(is_isomorphism(pb.p1));

    auto p = fiber_product(red, red);
    CHECK(p.group.invariant_factors() == inv({}, 2));
    CHECK(p.p1.then(red).equals(p.p2.then(red)));

    Hom zzero = Hom::zero(z, z2);
    auto p0 = fiber_product(zzero, zzero);
    CHECK(p0.group.invariant_factors() == inv({}, 2));
}

TEST_CASE("fiber product: mediating map exists for random cones") {
    Rng rng(23);
    Group z = Group::free_abelian(1);
    Group z4 = Group::cyclic(Int(4));
    Hom f = Hom::make(z, z4, IntMatrix{{Int(1)}});
    Hom g = Hom::mult(z4, Int(2));
    auto pb = fiber_product(f, g);
    for (int i = 0; i < 20; ++i) {
        // cone from Z: q1 = mult by a with f(q1) = g(q2) solvable
        Int a = rng.int_in(-8, 8);
        Hom q1 = Hom::mult(z, a * 2);  // f(2a x) = 2a x mod 4 = g(a x)
        Hom q2 = Hom::make(z, z4, IntMatrix{{a}});
        REQUIRE(q1.then(f).equals(q2.then(g)));
        Hom q12 = Hom::make(z, pb.into_sum.target(),
                            q1.matrix().hstack(q2.matrix()));
        Hom u = factor_through_subgroup({pb.group, pb.into_sum}, q12);
        CHECK(u.then(pb.p1).equals(q1));
        CHECK(u.then(pb.p2).equals(q2));
    }
}

TEST_CASE("torsion part: examples") {
    Group z = Group::free_abelian(1);
    CHECK(torsion_part(z, Int(5)).group.is_trivial());

    Group z4 = Group::cyclic(Int(4));
    CHECK(torsion_part(z4, Int(2)).group.invariant_factors() == inv({Int(2)}, 0));
    CHECK(torsion_part(z4, Int(4)).group.invariant_factors() == inv({Int(4)}, 0));
}

TEST_CASE("subgroup/restrict/inverse machinery") {
    Group g = Group::diagonal({Int(8), Int(0)});
    IntMatrix rows{{Int(2), Int(0)}, {Int(0), Int(3)}};
    auto s = subgroup(g, rows);
    CHECK(s.group.invariant_factors() == inv({Int(4)}, 1));

    auto c = express_in_subgroup(s, std::vector<Int>{Int(4), Int(3)});
    REQUIRE(c.has_value());
    GroupElement back{g, s.inclusion.apply(*c)};
    CHECK(back == GroupElement{g, {Int(4), Int(3)}});
    CHECK(!express_in_subgroup(s, std::vector<Int>{Int(1), Int(0)}).has_value());

    // doubling preserves the subgroup; restriction is well defined
    Hom dbl = Hom::mult(g, Int(2));
    Hom r = restrict_endo(s, dbl);
    CHECK(r.then(s.inclusion).equals(s.inclusion.then(dbl)));

    // inverse of an isomorphism
    Group z6 = Group::cyclic(Int(6));
    auto t = direct_sum({Group::cyclic(Int(2)), Group::cyclic(Int(3))});
    Hom iso = Hom::make(z6, t.group, IntMatrix{{Int(1), Int(1)}});
    REQUIRE(is_isomorphism(iso));
    Hom inv_iso = inverse(iso);
    CHECK(iso.then(inv_iso).equals(Hom::identity(z6)));
    CHECK(inv_iso.then(iso).equals(Hom::identity(t.group)));
}
