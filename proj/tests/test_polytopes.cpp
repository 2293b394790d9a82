#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "e8fold/foldcore.hpp"
#include "e8fold/polytopes.hpp"

using namespace e8fold;

TEST_CASE("T and T' are 24-cells forming the F4 root system") {
    const Constructions& k = constructions();
    CHECK(k.T.size() == 24);
    CHECK(k.Tp.size() == 24);
    CHECK(k.F4.size() == 48);
    CHECK(sets_disjoint(k.T, k.Tp));
    for (const Quaternion& q : k.F4.elems) CHECK(q.is_unit());
}

TEST_CASE("seeds are the quoted quaternions") {
    Seeds s = make_seeds();
    const Constructions& k = constructions();

    CHECK(k.T.contains(s.c));
    CHECK(k.Tp.contains(s.cp));
    CHECK(s.alpha.is_unit());
    CHECK(s.beta.is_unit());

    // |alpha|^2 = ((1/phi)^2 + 1 + phi^2)/4 = 1 exactly.
    CHECK(s.alpha.norm2() == TowerScalar(1));
    // alpha^5 = +-1 (in fact +1: the rotation angle is 2 pi / 5).
    CHECK(satisfies_seed_constraint(s.alpha));
    CHECK(s.alpha.pow(5) == Quaternion::one());

    // The published beta fails the seed-power constraint; the canonical seed
    // satisfies it with beta^5 = -1 and lives in the snub set S.
    CHECK_FALSE(satisfies_seed_constraint(s.beta));
    Quaternion b = canonical_beta();
    CHECK(satisfies_seed_constraint(b));
    CHECK(b.pow(5) == -Quaternion::one());
    CHECK(k.S.contains(b));
}

TEST_CASE("snub constructions") {
    const Constructions& k = constructions();
    CHECK(k.S.size() == 96);
    CHECK(k.Sp.size() == 96);
    CHECK(sets_disjoint(k.S, k.T));  // S = I - T

    // Seed power constraint is enforced: c has order 6, not 5.
    CHECK_THROWS_AS(make_S(k.seeds.c, k.T), std::invalid_argument);
    // Non-unit seeds are rejected outright.
    Quaternion two = {TowerScalar(2), {}, {}, {}};
    CHECK_THROWS_AS(make_S(two, k.T, false), std::invalid_argument);
}

TEST_CASE("I is the binary icosahedral group") {
    const Constructions& k = constructions();
    CHECK(k.I.size() == 120);
    CHECK(is_multiplicative_group(k.I));
    CHECK(k.I.elems == set_union(k.S, k.T, "S+T").elems);
    for (const Quaternion& q : k.I.elems) CHECK(q.is_unit());
}

TEST_CASE("I' is the alternate 600-cell generated equivalently by alpha or beta") {
    const Constructions& k = constructions();
    CHECK(k.Ip.size() == 120);
    // prq[beta^{0-4}, 1, T'] and prq[alpha^{0-4}, 1, T'] build the same set.
    QuatSet via_alpha = make_I(k.seeds.alpha, k.Tp);
    CHECK(via_alpha.elems == k.Ip.elems);
    // It is a translated copy of the icosian group, not a group itself.
    CHECK_FALSE(k.Ip.contains(Quaternion::one()));
    for (const Quaternion& q : k.Ip.elems) CHECK(q.is_unit());

    // As a 600-cell it still has 720 minimal edges.
    OrbitPolytope<4> p;
    for (const Quaternion& q : k.Ip.elems) p.vertices.push_back(to_vec4(q));
    p.compute_shells();
    CHECK(edge_graph(p, min_squared_distance(p)).size() == 720);
}

TEST_CASE("A' is a regular unit 5-cell whose translates tile J") {
    const Constructions& k = constructions();
    CHECK(k.Ap.size() == 5);
    CHECK(k.Ap.contains(Quaternion::one()));
    for (const Quaternion& x : k.Ap.elems) {
        CHECK(x.is_unit());
        for (const Quaternion& y : k.Ap.elems) {
            if (x == y) continue;
            TowerScalar d = x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2] + x.c[3] * y.c[3];
            CHECK(d == TowerScalar(Rational(-1, 4)));
        }
    }
    CHECK(make_J_from_I(k.Ap, k.I, "J").size() == 600);

    // A = (c' o A')*, elementwise.
    CHECK(k.A.size() == 5);
    Seeds s = make_seeds();
    for (const Quaternion& a : k.Ap.elems) CHECK(k.A.contains((s.cp * a).conj()));
}

TEST_CASE("J and J' are 600-vertex 120-cells with agreeing formulas") {
    const Constructions& k = constructions();
    CHECK(k.J.size() == 600);
    CHECK(k.Jp.size() == 600);

    CHECK(make_J_from_T(k.Ap, k.seeds.alpha, k.T, "J2").elems == k.J.elems);
    CHECK(make_J_from_T(k.Ap, k.beta, k.Tp, "Jp2").elems == k.Jp.elems);

    // Right multiplication by the icosian group permutes J.
    std::vector<Quaternion> v;
    v.reserve(600 * 120);
    for (const Quaternion& j : k.J.elems)
        for (const Quaternion& i : k.I.elems) v.push_back(j * i);
    CHECK(dedup_sorted(std::move(v)) == k.J.elems);
}

TEST_CASE("dual snub 24-cell") {
    const Constructions& k = constructions();
    CHECK(k.dual_snub.size() == 144);
    CHECK(make_dual_snub().elems == k.dual_snub.elems);
    CHECK(sets_disjoint(k.Sp, k.T));
    CHECK(sets_disjoint(k.Sp, k.Tp));
    CHECK(sets_disjoint(k.T, k.Tp));
    for (const Quaternion& q : k.dual_snub.elems) CHECK(q.is_unit());
}

TEST_CASE("F4 minimal pairwise distance regression") {
    const Constructions& k = constructions();
    OrbitPolytope<4> p;
    for (const Quaternion& q : k.F4.elems) p.vertices.push_back(to_vec4(q));
    p.compute_shells();
    // Frozen: the closest F4 pairs straddle the two 24-cells at squared
    // distance 2 - sqrt2.
    CHECK(min_squared_distance(p) == TowerScalar(2) - TowerScalar::sqrt2());
}

TEST_CASE("seed constraint filter") {
    const Constructions& k = constructions();
    QuatSet f = seed_constraint_filter(k.S);
    CHECK(f.size() == 48);
    CHECK(f.contains(k.seeds.alpha));
    CHECK(f.contains(k.beta));
    // Every excluded element really fails p^5 = +-1.
    for (const Quaternion& q : k.S.elems)
        if (!f.contains(q)) CHECK_FALSE(satisfies_seed_constraint(q));
}

TEST_CASE("perm orbits") {
    const Constructions& k = constructions();
    // Odd-sign rotation orbit of alpha regenerates the snub set.
    QuatSet orb = perm_orbit(k.seeds.alpha, "oSign");
    CHECK(orb.elems == k.S.elems);
    CHECK(set_union(orb, k.T, "orb+T").elems == k.I.elems);

    Quaternion onehot = Quaternion::one();
    CHECK(perm_orbit(onehot, "Rotate").size() == 8);

    TowerScalar half(Rational(1, 2));
    Quaternion hh = {half, half, half, half};
    CHECK(perm_orbit(hh, "Rotate").size() == 16);

    CHECK_THROWS_AS(perm_orbit(onehot, "spin"), std::invalid_argument);
}

TEST_CASE("folded unit 600-cell equals the icosian construction") {
    const Constructions& k = constructions();
    FoldContext ctx;
    H4Decomposition d = decompose(ctx, e8_roots_direct());
    auto unit = normalized_copy(d.h4l, NormClass::small);
    std::vector<Quaternion> uq;
    for (const Vec4& v : unit) uq.push_back(from_vec4(v));
    CHECK(dedup_sorted(std::move(uq)) == k.I.elems);
}

TEST_CASE("each root maps to ten J members covering J with multiplicity four") {
    const Constructions& k = constructions();
    FoldContext ctx;
    H4Decomposition d = decompose(ctx, e8_roots_direct());
    TowerScalar up = TowerScalar::sqrt_phi(), down = inv_sqrt_phi();

    std::vector<Quaternion> incidences;
    incidences.reserve(2400);
    int coincident_roots = 0;
    for (const FoldPair& fp : d.pairs) {
        Quaternion vl =
            from_vec4((fp.norm_class_left == NormClass::small ? up : down) * fp.left);
        Quaternion vr =
            from_vec4((fp.norm_class_right == NormClass::small ? up : down) * fp.right);
        CHECK(k.I.contains(vl));
        CHECK(k.I.contains(vr));
        if (vl == vr) ++coincident_roots;
        for (const Quaternion& a : k.Ap.elems) {
            Quaternion jl = a * vl, jr = a * vr;
            CHECK(k.J.contains(jl));
            CHECK(k.J.contains(jr));
            incidences.push_back(jl);
            incidences.push_back(jr);
        }
    }
    CHECK(incidences.size() == 2400);  // 240 roots x 10 members each
    // Exactly eight 24-cell-class roots have coinciding unit-scale halves.
    CHECK(coincident_roots == 8);

    std::sort(incidences.begin(), incidences.end(),
              [](const Quaternion& a, const Quaternion& b) { return lex_cmp(a, b) < 0; });
    std::size_t distinct = 0;
    int run = 1;
    bool uniform4 = true;
    for (std::size_t i = 1; i <= incidences.size(); ++i) {
        if (i < incidences.size() && incidences[i] == incidences[i - 1]) {
            ++run;
        } else {
            ++distinct;
            if (run != 4) uniform4 = false;
            run = 1;
        }
    }
    CHECK(distinct == 600);
    CHECK(uniform4);
}
