#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e8fold/foldcore.hpp"

using namespace e8fold;

namespace {

const OrbitPolytope<8>& roots() {
    static OrbitPolytope<8> r = e8_roots_direct();
    return r;
}
const FoldContext& ctx() {
    static FoldContext c;
    return c;
}
const H4Decomposition& decomp() {
    static H4Decomposition d = decompose(ctx(), roots());
    return d;
}
const MapLR& maplr() {
    static MapLR m = MapLR::build(decomp());
    return m;
}

TowerScalar inv_two_sqrt_phi() {
    return TowerScalar::sqrt_phi() * TowerScalar::from_parts(Rational(-1, 2), Rational(1, 2));
}

}  // namespace

TEST_CASE("U entries match the published matrix") {
    Mat8 u = build_U();
    // (1,1) entry is (1 - phi) / (2 sqrt(phi)).
    TowerScalar expect = (TowerScalar(1) - TowerScalar::phi()) * inv_two_sqrt_phi();
    CHECK(u[0][0] == expect);
    // (1,8) corner is -phi^2 / (2 sqrt(phi)).
    TowerScalar phi2 = TowerScalar::phi() * TowerScalar::phi();
    CHECK(u[0][7] == -phi2 * inv_two_sqrt_phi());

    Mat8 ui = build_U_inverse();
    CHECK(ui[0][0] == (TowerScalar::phi() - TowerScalar(1)) * inv_two_sqrt_phi());
    CHECK(ui[0][7] == u[0][7]);  // -phi^2 entries are fixed by the exchange
}

TEST_CASE("U structural properties") {
    UPropertyReport rep = u_property_report();
    CHECK(rep.symmetric_u);
    CHECK(rep.symmetric_uinv);
    CHECK(rep.traceless_u);
    CHECK(rep.det_one_u);
    CHECK(rep.det_one_uinv);
    CHECK(rep.palindromic_u);
    CHECK(rep.palindromic_uinv);
    CHECK(rep.inverse_exact);
    CHECK(rep.exchange_rule);
    CHECK(rep.all_pass());
}

TEST_CASE("charpoly of U frozen regression values") {
    // lambda^8 - 2 sqrt5 lambda^6 + 7 lambda^4 - 2 sqrt5 lambda^2 + 1
    CharPoly<8> p = charpoly(build_U());
    TowerScalar m2s5 = TowerScalar(-2) * TowerScalar::sqrt5();
    CHECK(p.coeff[8] == TowerScalar(1));
    CHECK(p.coeff[7] == TowerScalar(0));
    CHECK(p.coeff[6] == m2s5);
    CHECK(p.coeff[5] == TowerScalar(0));
    CHECK(p.coeff[4] == TowerScalar(7));
    CHECK(p.coeff[3] == TowerScalar(0));
    CHECK(p.coeff[2] == m2s5);
    CHECK(p.coeff[1] == TowerScalar(0));
    CHECK(p.coeff[0] == TowerScalar(1));
    // Cayley-Hamilton, exactly.
    CHECK(charpoly_eval(p, build_U()) == Mat8());
}

TEST_CASE("U assembles from gate-patterned blocks") {
    CHECK(mat_mul(cnot_gate(), cnot_gate()) == Mat4::identity());
    CHECK(mat_mul(swap_gate(), swap_gate()) == Mat4::identity());
    CHECK(det(cnot_gate()) == TowerScalar(-1));
    CHECK(build_U_from_gates() == build_U());
    CHECK(u_central_block_zero_structure(build_U()));
}

TEST_CASE("rows 2..4 of U hold six icosahedron vertices") {
    // Columns of the row-2..4 slice are 6 nonzero 3-vectors of the form
    // (0, +-1, +-phi) / (2 sqrt phi) up to coordinate rotation, plus two zero
    // columns: exactly the golden-rectangle icosahedron data.
    Mat8 u = build_U();
    int zero_cols = 0, icosa_cols = 0;
    TowerScalar scale = inv_two_sqrt_phi();
    TowerScalar norm_expected = (TowerScalar(1) + TowerScalar::phi() * TowerScalar::phi()) *
                                (scale * scale);
    for (int j = 0; j < 8; ++j) {
        Vec4 col;  // only 3 coords used
        bool all_zero = true;
        for (int i = 1; i <= 3; ++i) {
            col[i - 1] = u[i][j];
            if (!u[i][j].is_zero()) all_zero = false;
        }
        if (all_zero) {
            ++zero_cols;
            continue;
        }
        // Each nonzero column has one zero coordinate and norm^2 = (1+phi^2)/(4 phi).
        int zeros = 0;
        for (int i = 0; i < 3; ++i) zeros += col[i].is_zero();
        CHECK(zeros == 1);
        CHECK(squared_norm(col) == norm_expected);
        ++icosa_cols;
    }
    CHECK(zero_cols == 2);
    CHECK(icosa_cols == 6);
}

TEST_CASE("fold of e1 - e2") {
    Vec8 r;
    r[0] = TowerScalar(1);
    r[1] = TowerScalar(-1);
    FoldPair fp = ctx().fold(r);
    CHECK(squared_norm(fp.left) == TowerScalar::inv_phi());
    CHECK(squared_norm(fp.right) == TowerScalar::phi());
    CHECK(fp.norm_class_left == NormClass::small);
    CHECK(fp.norm_class_right == NormClass::large);
    CHECK_FALSE(fp.t_class);
}

TEST_CASE("fold of the all-half root reverses with equal signs") {
    Vec8 r;
    for (int i = 0; i < 8; ++i) r[i] = TowerScalar(Rational(1, 2));
    FoldPair fp = ctx().fold(r);
    CHECK(squared_norm(fp.left) == TowerScalar::phi());
    CHECK(squared_norm(fp.right) == TowerScalar::phi());
    CHECK(fp.t_class);
    Vec4 rev;
    for (int i = 0; i < 4; ++i) rev[i] = fp.left[3 - i];
    CHECK(fp.right == rev);
}

TEST_CASE("fold is linear under negation") {
    Vec8 r;
    r[2] = TowerScalar(1);
    r[5] = TowerScalar(1);
    FoldPair a = ctx().fold(r);
    FoldPair b = ctx().fold(-r);
    CHECK(b.left == -a.left);
    CHECK(b.right == -a.right);
    CHECK(a.norm_class_left == b.norm_class_left);
    CHECK(a.t_class == b.t_class);
}

TEST_CASE("fold rejects non-roots") {
    Vec8 junk;
    junk[0] = TowerScalar(3);
    CHECK_THROWS_AS(ctx().fold(junk), std::domain_error);
}

TEST_CASE("decompose yields four 120-vertex 600-cell copies") {
    const H4Decomposition& d = decomp();
    CHECK(d.h4l.size() == 120);
    CHECK(d.phi_h4l.size() == 120);
    CHECK(d.h4r.size() == 120);
    CHECK(d.phi_h4r.size() == 120);

    // The phi copies are exactly phi times the unit-norm-class copies.
    std::vector<Vec4> scaled;
    for (const Vec4& v : d.h4l) scaled.push_back(TowerScalar::phi() * v);
    detail::sort4(scaled);
    CHECK(scaled == d.phi_h4l);
    scaled.clear();
    for (const Vec4& v : d.h4r) scaled.push_back(TowerScalar::phi() * v);
    detail::sort4(scaled);
    CHECK(scaled == d.phi_h4r);

    // Norm classes are exact with ratio phi^2.
    for (const Vec4& v : d.h4l) CHECK(squared_norm(v) == fold_small_norm2());
    for (const Vec4& v : d.phi_h4l) CHECK(squared_norm(v) == fold_large_norm2());
    CHECK(fold_large_norm2() ==
          fold_small_norm2() * TowerScalar::phi() * TowerScalar::phi());

    // Each copy carries 720 minimal edges.
    for (const auto* copy : {&d.h4l, &d.phi_h4l, &d.h4r, &d.phi_h4r}) {
        OrbitPolytope<4> p;
        p.vertices = *copy;
        p.compute_shells();
        CHECK(edge_graph(p, min_squared_distance(p)).size() == 720);
    }
}

TEST_CASE("exactly 24 t-class roots per scale") {
    int small = 0, large = 0, nt = 0;
    for (const FoldPair& fp : decomp().pairs) {
        if (fp.t_class)
            (fp.norm_class_left == NormClass::small ? small : large)++;
        else
            ++nt;
    }
    CHECK(small == 24);
    CHECK(large == 24);
    CHECK(nt == 192);
}

TEST_CASE("mapLR well-defined involution with consistent dual roles") {
    const MapLR& m = maplr();
    CHECK(m.size() == 480);
    for (const FoldPair& fp : decomp().pairs) {
        CHECK(m.apply(m.apply(fp.left)) == fp.left);
        CHECK(m.apply(m.apply(fp.right)) == fp.right);
        // Every folded half occurs in both roles and the two lookups agree.
        CHECK(m.is_left(fp.right));
        CHECK(m.is_right(fp.left));
    }
    Vec4 junk;
    junk[0] = TowerScalar(7);
    CHECK_THROWS_AS(m.apply(junk), std::domain_error);
}

TEST_CASE("mapLR respects the 24-cell reversal rule and swaps norm class elsewhere") {
    for (const FoldPair& fp : decomp().pairs) {
        Vec4 image = maplr().apply(fp.left);
        CHECK(image == fp.right);
        if (fp.t_class) {
            Vec4 rev;
            for (int i = 0; i < 4; ++i) rev[i] = fp.left[3 - i];
            if (fp.norm_class_left == NormClass::large)
                CHECK(image == rev);  // phi copy keeps signs
            else
                CHECK(image == -rev);  // unit copy flips signs
        } else {
            TowerScalar ratio_up = squared_norm(fp.left) * TowerScalar::phi() * TowerScalar::phi();
            TowerScalar ratio_dn = squared_norm(fp.left) * (TowerScalar::inv_phi() * TowerScalar::inv_phi());
            TowerScalar n = squared_norm(image);
            CHECK((n == ratio_up || n == ratio_dn));
            CHECK(n != squared_norm(fp.left));
        }
    }
}

TEST_CASE("negated roots land in the same copy") {
    const H4Decomposition& d = decomp();
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        FoldPair neg = ctx().fold(-d.roots[i]);
        CHECK(neg.norm_class_left == d.pairs[i].norm_class_left);
        CHECK(neg.norm_class_right == d.pairs[i].norm_class_right);
    }
}

TEST_CASE("unfold reconstructs the roots from the unit 600-cell alone") {
    auto unit = normalized_copy(decomp().h4l, NormClass::small);
    for (const Vec4& v : unit) CHECK(squared_norm(v) == TowerScalar(1));
    auto rebuilt = unfold(ctx(), maplr(), unit);
    CHECK(rebuilt.size() == 240);
    CHECK(rebuilt == roots().vertices);

    // The right-side unit copy is the same 600-cell and unfolds identically.
    auto unit_r = normalized_copy(decomp().h4r, NormClass::small);
    CHECK(unit_r == unit);
}

TEST_CASE("unfold rejects a perturbed 600-cell") {
    auto unit = normalized_copy(decomp().h4l, NormClass::small);
    // Perturb one vertex but keep it unit-normed: swap two coordinates in a
    // way that leaves the 600-cell (it maps to another chirality class).
    Vec4 bad = unit[0];
    std::swap(bad.c[0], bad.c[1]);
    if (bad == unit[0]) std::swap(bad.c[2], bad.c[3]);
    unit[0] = bad;
    CHECK_THROWS(unfold(ctx(), maplr(), unit));

    // Wrong cardinality.
    unit.pop_back();
    CHECK_THROWS_AS(unfold(ctx(), maplr(), unit), std::invalid_argument);
}

TEST_CASE("exp(iU) numeric report") {
    ExpIUReport rep = exp_iU_numeric(build_U());
    CHECK(rep.unitarity_residual < 1e-12);
    CHECK(std::abs(rep.im_trace) < 1e-12);
    CHECK(rep.re_trace > 3.5);
    CHECK(rep.re_trace < 4.5);
    // Frozen computed value.
    CHECK(rep.re_trace == doctest::Approx(4.00370111467).epsilon(1e-9));
}
