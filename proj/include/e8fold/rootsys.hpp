#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "e8fold/linalg.hpp"

namespace e8fold {

// Finite reflection group data: simple roots in a fixed ambient dimension and
// the (generalized) Cartan matrix C[i][j] = 2<a_i,a_j>/<a_j,a_j>.
template <std::size_t N>
struct GroupSpec {
    std::string name;
    std::size_t rank = 0;
    std::vector<Vec<N>> simple_roots;
    std::vector<std::vector<TowerScalar>> cartan;

    static GroupSpec make(std::string name, std::vector<Vec<N>> roots) {
        GroupSpec g;
        g.name = std::move(name);
        g.rank = roots.size();
        if (g.rank > 8) throw std::invalid_argument("GroupSpec: rank above 8");
        g.simple_roots = std::move(roots);
        g.cartan.assign(g.rank, std::vector<TowerScalar>(g.rank));
        for (std::size_t i = 0; i < g.rank; ++i) {
            for (std::size_t j = 0; j < g.rank; ++j) {
                TowerScalar num = TowerScalar(2) * dot(g.simple_roots[i], g.simple_roots[j]);
                g.cartan[i][j] = num * squared_norm(g.simple_roots[j]).inverse();
            }
            if (g.cartan[i][i] != TowerScalar(2))
                throw std::invalid_argument("GroupSpec: Cartan diagonal must be 2");
        }
        return g;
    }
};

// Ringed-node selector for a Weyl orbit; all-zero denotes the snub orbit.
struct OrbitLabel {
    std::vector<int> bits;

    static OrbitLabel from_string(const std::string& s) {
        OrbitLabel l;
        for (char ch : s) {
            if (ch != '0' && ch != '1') throw std::invalid_argument("OrbitLabel: bits must be 0/1");
            l.bits.push_back(ch - '0');
        }
        return l;
    }
    std::string to_string() const {
        std::string s;
        for (int b : bits) s += char('0' + b);
        return s;
    }
};

template <std::size_t N>
struct OrbitPolytope {
    std::vector<Vec<N>> vertices;  // deduplicated, canonically sorted
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    TowerScalar edge_squared_length;
    // Norm shells: exact squared norm -> vertex indices, sorted by norm.
    std::vector<std::pair<TowerScalar, std::vector<uint32_t>>> shells;
    std::string group;
    std::string orbit;

    void compute_shells() {
        shells.clear();
        std::vector<std::pair<TowerScalar, std::vector<uint32_t>>> groups;
        for (uint32_t i = 0; i < vertices.size(); ++i) {
            TowerScalar n2 = squared_norm(vertices[i]);
            bool placed = false;
            for (auto& g : groups) {
                if (g.first == n2) {
                    g.second.push_back(i);
                    placed = true;
                    break;
                }
            }
            if (!placed) groups.push_back({n2, {i}});
        }
        std::sort(groups.begin(), groups.end(),
                  [](const auto& x, const auto& y) { return TowerScalar::cmp(x.first, y.first) < 0; });
        shells = std::move(groups);
    }

    // Exact squared circumradius; requires a single shell.
    const TowerScalar& squared_radius() const {
        if (shells.size() != 1)
            throw std::logic_error("squared_radius: vertex set has several norm shells");
        return shells[0].first;
    }
};

namespace detail {

template <std::size_t N>
struct VecKeyHash {
    std::size_t operator()(const Vec<N>& v) const noexcept { return v.hash(); }
};
template <std::size_t N>
struct VecKeyEq {
    bool operator()(const Vec<N>& a, const Vec<N>& b) const noexcept { return a == b; }
};

template <std::size_t N>
inline void canonical_sort(std::vector<Vec<N>>& verts) {
    std::sort(verts.begin(), verts.end(),
              [](const Vec<N>& a, const Vec<N>& b) { return lex_cmp(a, b) < 0; });
}

}  // namespace detail

// Closure of the seed under the simple reflections s_i(x) = x - 2<x,a_i>/<a_i,a_i> a_i.
// generator_order permutes the generator sweep; the resulting set is identical.
template <std::size_t N>
inline OrbitPolytope<N> weyl_orbit(const GroupSpec<N>& spec, const Vec<N>& weight,
                                   std::vector<std::size_t> generator_order = {}) {
    if (generator_order.empty()) {
        generator_order.resize(spec.rank);
        for (std::size_t i = 0; i < spec.rank; ++i) generator_order[i] = i;
    }
    std::vector<TowerScalar> two_over_norm(spec.rank);
    for (std::size_t i = 0; i < spec.rank; ++i)
        two_over_norm[i] = TowerScalar(2) * squared_norm(spec.simple_roots[i]).inverse();

    std::unordered_set<Vec<N>, detail::VecKeyHash<N>, detail::VecKeyEq<N>> seen;
    std::deque<Vec<N>> frontier;
    seen.insert(weight);
    frontier.push_back(weight);
    while (!frontier.empty()) {
        Vec<N> x = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t gi : generator_order) {
            const Vec<N>& a = spec.simple_roots[gi];
            TowerScalar proj = dot(x, a);
            if (proj.is_zero()) continue;  // reflection fixes x
            Vec<N> y = x - (proj * two_over_norm[gi]) * a;
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    OrbitPolytope<N> out;
    out.vertices.assign(seen.begin(), seen.end());
    detail::canonical_sort(out.vertices);
    out.group = spec.name;
    out.compute_shells();
    return out;
}

// Fundamental weights as rows: w_i = sum_j (C^-1)_ij a_j.
template <std::size_t N>
inline std::vector<Vec<N>> fundamental_weights(const GroupSpec<N>& spec) {
    Mat<8> c = Mat<8>::identity();
    for (std::size_t i = 0; i < spec.rank; ++i)
        for (std::size_t j = 0; j < spec.rank; ++j) c[i][j] = spec.cartan[i][j];
    Mat<8> inv = mat_inverse(c);
    std::vector<Vec<N>> weights(spec.rank);
    for (std::size_t i = 0; i < spec.rank; ++i) {
        Vec<N> w;
        for (std::size_t j = 0; j < spec.rank; ++j) w = w + inv[i][j] * spec.simple_roots[j];
        weights[i] = w;
    }
    return weights;
}

template <std::size_t N>
inline Vec<N> weight_for_label(const GroupSpec<N>& spec, const OrbitLabel& label) {
    if (label.bits.size() != spec.rank)
        throw std::invalid_argument("OrbitLabel: rank mismatch");
    auto weights = fundamental_weights(spec);
    Vec<N> w;
    for (std::size_t i = 0; i < spec.rank; ++i)
        if (label.bits[i]) w = w + weights[i];
    return w;
}

// ---------------------------------------------------------------------------
// Group catalog. Rank <= 4 groups live in Vec<4>, higher ranks in Vec<8>.
// ---------------------------------------------------------------------------

namespace detail {

inline TowerScalar ts(int64_t v) { return TowerScalar(v); }
inline TowerScalar tsr(int64_t n, int64_t d) { return TowerScalar(Rational(n, d)); }

template <std::size_t N>
inline Vec<N> basis_diff(std::size_t i, std::size_t j) {
    Vec<N> v;
    v[i] = ts(1);
    v[j] = ts(-1);
    return v;
}

}  // namespace detail

inline GroupSpec<4> group_a3() {
    using detail::basis_diff;
    return GroupSpec<4>::make(
        "A3", {basis_diff<4>(0, 1), basis_diff<4>(1, 2), basis_diff<4>(2, 3)});
}

inline GroupSpec<4> group_b3() {
    using namespace detail;
    Vec<4> a3;
    a3[2] = ts(1);
    return GroupSpec<4>::make("B3", {basis_diff<4>(0, 1), basis_diff<4>(1, 2), a3});
}

// H3 with the 5-bond between nodes 1 and 2; unit-length roots over Q(sqrt5).
inline GroupSpec<4> group_h3() {
    TowerScalar half = detail::tsr(1, 2);
    TowerScalar half_phi = detail::tsr(1, 2) * TowerScalar::phi();
    TowerScalar half_inv_phi = detail::tsr(1, 2) * TowerScalar::inv_phi();
    Vec<4> a1, a2, a3;
    a1[2] = TowerScalar(1);
    a2[0] = half_inv_phi;
    a2[1] = -half;
    a2[2] = -half_phi;
    a3[1] = TowerScalar(1);
    return GroupSpec<4>::make("H3", {a1, a2, a3});
}

inline GroupSpec<8> group_a4() {
    using detail::basis_diff;
    return GroupSpec<8>::make("A4", {basis_diff<8>(0, 1), basis_diff<8>(1, 2),
                                     basis_diff<8>(2, 3), basis_diff<8>(3, 4)});
}

inline GroupSpec<4> group_d4() {
    using namespace detail;
    Vec<4> a4;
    a4[2] = ts(1);
    a4[3] = ts(1);
    return GroupSpec<4>::make(
        "D4", {basis_diff<4>(0, 1), basis_diff<4>(1, 2), basis_diff<4>(2, 3), a4});
}

inline GroupSpec<4> group_f4() {
    using namespace detail;
    Vec<4> a3, a4;
    a3[3] = ts(1);
    a4[0] = tsr(1, 2);
    a4[1] = tsr(-1, 2);
    a4[2] = tsr(-1, 2);
    a4[3] = tsr(-1, 2);
    return GroupSpec<4>::make(
        "F4", {basis_diff<4>(1, 2), basis_diff<4>(2, 3), a3, a4});
}

// H4 ordered so that the parent orbit (1000) is the 600-cell and (0001) the
// 120-cell; the 5-bond joins nodes 3 and 4. Unit-length roots over Q(sqrt5).
inline GroupSpec<4> group_h4() {
    TowerScalar half = detail::tsr(1, 2);
    TowerScalar half_phi = detail::tsr(1, 2) * TowerScalar::phi();
    TowerScalar half_inv_phi = detail::tsr(1, 2) * TowerScalar::inv_phi();
    Vec<4> b1, b2, b3, b4;
    b1[3] = TowerScalar(1);
    b2[0] = -half;
    b2[1] = -half;
    b2[2] = half;
    b2[3] = -half;
    b3[0] = half_phi;
    b3[1] = half;
    b3[2] = half_inv_phi;
    b4[0] = -half;
    b4[1] = -half_inv_phi;
    b4[2] = -half_phi;
    return GroupSpec<4>::make("H4", {b1, b2, b3, b4});
}

inline GroupSpec<8> group_d6() {
    using detail::basis_diff;
    Vec<8> a6;
    a6[4] = detail::ts(1);
    a6[5] = detail::ts(1);
    return GroupSpec<8>::make("D6", {basis_diff<8>(0, 1), basis_diff<8>(1, 2),
                                     basis_diff<8>(2, 3), basis_diff<8>(3, 4),
                                     basis_diff<8>(4, 5), a6});
}

// E8 simple roots in the even coordinate system, Bourbaki numbering.
inline GroupSpec<8> group_e8() {
    using namespace detail;
    Vec<8> a1;
    a1[0] = tsr(1, 2);
    a1[7] = tsr(1, 2);
    for (int i = 1; i <= 6; ++i) a1[i] = tsr(-1, 2);
    Vec<8> a2;
    a2[0] = ts(1);
    a2[1] = ts(1);
    return GroupSpec<8>::make(
        "E8", {a1, a2, basis_diff<8>(1, 0), basis_diff<8>(2, 1), basis_diff<8>(3, 2),
               basis_diff<8>(4, 3), basis_diff<8>(5, 4), basis_diff<8>(6, 5)});
}

// ---------------------------------------------------------------------------
// E8 roots by direct construction.
// ---------------------------------------------------------------------------

// 112 integer vectors (+-1, +-1, 0^6) plus 128 half-integer vectors (+-1/2)^8
// with an even number of minus signs; every root has squared norm 2.
inline OrbitPolytope<8> e8_roots_direct() {
    OrbitPolytope<8> out;
    out.group = "E8";
    out.orbit = "roots";
    out.vertices.reserve(240);
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            for (int si = 0; si < 2; ++si) {
                for (int sj = 0; sj < 2; ++sj) {
                    Vec8 v;
                    v[i] = TowerScalar(si ? -1 : 1);
                    v[j] = TowerScalar(sj ? -1 : 1);
                    out.vertices.push_back(v);
                }
            }
        }
    }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Vec8 v;
        for (int i = 0; i < 8; ++i) v[i] = detail::tsr((mask >> i) & 1 ? -1 : 1, 2);
        out.vertices.push_back(v);
    }
    detail::canonical_sort(out.vertices);
    out.compute_shells();
    return out;
}

// The E8 highest root e7 + e8 (adjoint node, Bourbaki node 8).
inline Vec8 e8_highest_root() {
    Vec8 v;
    v[6] = TowerScalar(1);
    v[7] = TowerScalar(1);
    return v;
}

// ---------------------------------------------------------------------------
// Pascal-row canonical ordering of the 256 = 240 + 16 vectors.
// ---------------------------------------------------------------------------

struct PascalSequence {
    std::vector<Vec8> order;                              // 256 vectors
    std::vector<std::pair<uint32_t, uint32_t>> blocks;    // [begin, end) per block
    std::vector<bool> half_integer;                       // per block
};

namespace detail {

inline bool is_half_integer_vec(const Vec8& v) {
    for (int i = 0; i < 8; ++i)
        if (v[i].coeffs()[0].den() != BigInt(2)) return false;
    return true;
}

inline int minus_count(const Vec8& v) {
    int n = 0;
    for (int i = 0; i < 8; ++i)
        if (v[i].sign() < 0) ++n;
    return n;
}

inline int first_nonzero_sign(const Vec8& v) {
    for (int i = 0; i < 8; ++i) {
        int s = v[i].sign();
        if (s) return s;
    }
    return 0;
}

// Descending lexicographic order inside each Pascal block.
inline void desc_sort(std::vector<Vec8>& v) {
    std::sort(v.begin(), v.end(), [](const Vec8& a, const Vec8& b) { return lex_cmp(a, b) > 0; });
}

}  // namespace detail

// Orders the 240 roots plus the 16 generator vectors (+-e_i) into the ten
// Pascal-row blocks 1,8,28,56,35,35,56,28,8,1; blocks alternate between
// half-integer and integer vectors and the right five blocks are the negated
// left five in reverse order.
inline PascalSequence canonical_pascal_order(const OrbitPolytope<8>& roots) {
    if (roots.vertices.size() != 240)
        throw std::invalid_argument("canonical_pascal_order: expected the 240 E8 roots");
    {
        OrbitPolytope<8> check = e8_roots_direct();
        if (roots.vertices != check.vertices)
            throw std::invalid_argument("canonical_pascal_order: input is not the E8 root set");
    }

    std::vector<std::vector<Vec8>> blocks(10);
    std::vector<Vec8> half_by_minus[5];  // index by minus_count/2: 0,1,2,3,4
    std::vector<Vec8> int_roots_pos, int_roots_neg;
    for (const Vec8& v : roots.vertices) {
        if (detail::is_half_integer_vec(v)) {
            half_by_minus[detail::minus_count(v) / 2].push_back(v);
        } else {
            (detail::first_nonzero_sign(v) > 0 ? int_roots_pos : int_roots_neg).push_back(v);
        }
    }
    blocks[0] = half_by_minus[0];
    blocks[2] = half_by_minus[1];
    blocks[7] = half_by_minus[3];
    blocks[9] = half_by_minus[4];
    // Split the 70 four-minus vectors into antipodal halves by first coordinate.
    for (const Vec8& v : half_by_minus[2])
        (v[0].sign() > 0 ? blocks[4] : blocks[5]).push_back(v);
    blocks[3] = int_roots_pos;
    blocks[6] = int_roots_neg;
    for (int i = 0; i < 8; ++i) {
        Vec8 plus, minus;
        plus[i] = TowerScalar(1);
        minus[i] = TowerScalar(-1);
        blocks[1].push_back(plus);
        blocks[8].push_back(minus);
    }

    PascalSequence seq;
    seq.half_integer = {true, false, true, false, true, true, false, true, false, true};
    uint32_t begin = 0;
    for (auto& b : blocks) {
        detail::desc_sort(b);
        seq.blocks.push_back({begin, begin + static_cast<uint32_t>(b.size())});
        begin += static_cast<uint32_t>(b.size());
        for (auto& v : b) seq.order.push_back(v);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Edge detection.
// ---------------------------------------------------------------------------

namespace detail {

// Vertices rescaled to integer tower coefficients for fast exact dot products.
struct ScaledIntSet {
    // entry layout: per vertex, 8 coords x 8 tower coefficients.
    std::vector<std::array<int64_t, 64>> data;
    std::vector<std::array<uint8_t, 9>> nz;  // per coord: bitmask of nonzero coefficients, [8]=coord mask
    BigInt denom;
    bool valid = false;
};

// Doubled basis-product table: basis_i * basis_j = 1/2 * sum over (slot, mul).
// Six slots at most carry two terms (the sqrt(phi) squares).
struct BasisProd {
    int8_t slot[2];
    int64_t mul[2];  // scaled by 2
    int count;
};

inline const std::array<std::array<BasisProd, 8>, 8>& basis_prod_table() {
    static const auto table = [] {
        std::array<std::array<BasisProd, 8>, 8> t{};
        std::array<TowerScalar, 8> basis = {
            TowerScalar::one(),   TowerScalar::sqrt2(),
            TowerScalar::sqrt5(), TowerScalar::sqrt10(),
            TowerScalar::sqrt_phi(),
            TowerScalar::sqrt2() * TowerScalar::sqrt_phi(),
            TowerScalar::sqrt5() * TowerScalar::sqrt_phi(),
            TowerScalar::sqrt10() * TowerScalar::sqrt_phi()};
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                TowerScalar prod = basis[i] * basis[j];
                auto cs = prod.coeffs();
                BasisProd bp{};
                bp.count = 0;
                for (int k = 0; k < 8; ++k) {
                    if (cs[k].is_zero()) continue;
                    Rational doubled = cs[k] * Rational(2);
                    if (!doubled.is_integer())
                        throw std::logic_error("basis product not half-integral");
                    bp.slot[bp.count] = static_cast<int8_t>(k);
                    bp.mul[bp.count] =
                        doubled.num().sign() * static_cast<int64_t>(doubled.num().abs_uint64());
                    ++bp.count;
                }
                t[i][j] = bp;
            }
        }
        return t;
    }();
    return table;
}

template <std::size_t N>
inline ScaledIntSet scale_to_integers(const std::vector<Vec<N>>& verts) {
    ScaledIntSet s;
    BigInt d(1);
    for (const auto& v : verts)
        for (std::size_t c = 0; c < N; ++c)
            for (const Rational& r : v[c].coeffs())
                if (!r.is_zero()) d = lcm(d, r.den());
    if (!d.fits_uint64() || d.abs_uint64() > (1ull << 20)) return s;
    s.denom = d;
    s.data.resize(verts.size());
    s.nz.resize(verts.size());
    int64_t max_abs = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        s.data[i].fill(0);
        s.nz[i].fill(0);
        for (std::size_t c = 0; c < N; ++c) {
            auto cs = verts[i][c].coeffs();
            for (int k = 0; k < 8; ++k) {
                if (cs[k].is_zero()) continue;
                BigInt scaled = cs[k].num() * (d / cs[k].den());
                if (!scaled.fits_uint64()) return s;
                int64_t val = scaled.sign() * static_cast<int64_t>(scaled.abs_uint64());
                if (std::abs(val) > max_abs) max_abs = std::abs(val);
                s.data[i][c * 8 + k] = val;
                s.nz[i][c] |= uint8_t(1) << k;
            }
            if (s.nz[i][c]) s.nz[i][8] |= uint8_t(1) << c;
        }
    }
    // Worst-case accumulation bound: 8 coords * 64 pairs * 10 * max^2 must fit int64.
    if (max_abs > (1ll << 24)) return s;
    s.valid = true;
    return s;
}

// 2 * denom^2 * dot(u, v), accumulated per tower basis slot.
inline void scaled_dot(const ScaledIntSet& s, std::size_t u, std::size_t v, std::size_t ncoords,
                       int64_t out[8]) {
    for (int k = 0; k < 8; ++k) out[k] = 0;
    const auto& table = basis_prod_table();
    const auto& du = s.data[u];
    const auto& dv = s.data[v];
    const auto& nu = s.nz[u];
    const auto& nv = s.nz[v];
    for (std::size_t c = 0; c < ncoords; ++c) {
        uint8_t mu = nu[c], mv = nv[c];
        if (!mu || !mv) continue;
        for (uint8_t bi = mu; bi;) {
            int i = std::countr_zero(bi);
            bi &= bi - 1;
            int64_t uv = du[c * 8 + i];
            for (uint8_t bj = mv; bj;) {
                int j = std::countr_zero(bj);
                bj &= bj - 1;
                int64_t p = uv * dv[c * 8 + j];
                const BasisProd& bp = table[i][j];
                for (int t = 0; t < bp.count; ++t) out[bp.slot[t]] += p * bp.mul[t];
            }
        }
    }
}

}  // namespace detail

// All unordered vertex pairs of p at exact squared distance sq_len. Uses
// norm-shell pruning and an integer-scaled exact dot-product fast path; falls
// back to full tower arithmetic if the coordinates cannot be scaled safely.
template <std::size_t N>
inline std::vector<std::pair<uint32_t, uint32_t>> edge_graph(const OrbitPolytope<N>& p,
                                                             const TowerScalar& sq_len,
                                                             unsigned threads = 0) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    const auto& verts = p.vertices;
    const std::size_t n = verts.size();
    if (n < 2) return edges;

    // Shell feasibility: a pair from shells with norms n1, n2 can be at squared
    // distance t only if (sqrt(n1) - sqrt(n2))^2 <= t <= (sqrt(n1) + sqrt(n2))^2.
    std::vector<std::pair<TowerScalar, std::vector<uint32_t>>> shells = p.shells;
    if (shells.empty()) {
        OrbitPolytope<N> tmp = p;
        tmp.compute_shells();
        shells = tmp.shells;
    }
    auto feasible = [&sq_len](const TowerScalar& n1, const TowerScalar& n2) {
        // Need (n1 + n2 - t)^2 <= 4 n1 n2; covers both triangle bounds.
        TowerScalar s = n1 + n2 - sq_len;
        return TowerScalar::cmp(s * s, TowerScalar(4) * n1 * n2) <= 0;
    };

    detail::ScaledIntSet scaled = detail::scale_to_integers(verts);

    // Pair predicate, exact either way.
    auto checker = [&](uint32_t i, uint32_t j, const TowerScalar& ni, const TowerScalar& nj,
                       const int64_t target[8]) {
        if (scaled.valid) {
            int64_t acc[8];
            detail::scaled_dot(scaled, i, j, N, acc);
            for (int k = 0; k < 8; ++k)
                if (acc[k] != target[k]) return false;
            return true;
        }
        Vec<N> d = verts[i] - verts[j];
        (void)ni;
        (void)nj;
        return squared_norm(d) == sq_len;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    for (std::size_t si = 0; si < shells.size(); ++si) {
        for (std::size_t sj = si; sj < shells.size(); ++sj) {
            if (!feasible(shells[si].first, shells[sj].first)) continue;
            const auto& A = shells[si].second;
            const auto& B = shells[sj].second;
            // Edge condition in scaled integers: 2*D^2*dot(u,v) == D^2*(n_i + n_j - t).
            int64_t target[8] = {0, 0, 0, 0, 0, 0, 0, 0};
            if (scaled.valid) {
                TowerScalar t2 = shells[si].first + shells[sj].first - sq_len;
                TowerScalar d2(Rational(scaled.denom * scaled.denom, BigInt(1)));
                auto cs = (t2 * d2).coeffs();
                bool integral = true;
                for (int k = 0; k < 8 && integral; ++k) integral = cs[k].is_integer();
                if (!integral) continue;  // scaled dots are integral, so no pair can match
                for (int k = 0; k < 8; ++k)
                    target[k] = cs[k].num().sign() * static_cast<int64_t>(cs[k].num().abs_uint64());
            }

            auto run_range = [&](std::size_t lo, std::size_t hi,
                                 std::vector<std::pair<uint32_t, uint32_t>>& out) {
                if (si == sj) {
                    for (std::size_t x = lo; x < hi; ++x)
                        for (std::size_t y = x + 1; y < A.size(); ++y)
                            if (checker(A[x], A[y], shells[si].first, shells[sj].first, target))
                                out.push_back({std::min(A[x], A[y]), std::max(A[x], A[y])});
                } else {
                    for (std::size_t x = lo; x < hi; ++x)
                        for (std::size_t y = 0; y < B.size(); ++y)
                            if (checker(A[x], B[y], shells[si].first, shells[sj].first, target))
                                out.push_back({std::min(A[x], B[y]), std::max(A[x], B[y])});
                }
            };

            std::size_t rows = A.size();
            if (threads <= 1 || rows < 256 || !scaled.valid) {
                run_range(0, rows, edges);
            } else {
                std::vector<std::vector<std::pair<uint32_t, uint32_t>>> parts(threads);
                std::vector<std::thread> pool;
                std::size_t chunk = (rows + threads - 1) / threads;
                for (unsigned t = 0; t < threads; ++t) {
                    std::size_t lo = t * chunk, hi = std::min(rows, lo + chunk);
                    if (lo >= hi) break;
                    pool.emplace_back([&, lo, hi, t] { run_range(lo, hi, parts[t]); });
                }
                for (auto& th : pool) th.join();
                for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Smallest nonzero pairwise squared distance, exact. A float scan shortlists
// candidate pairs; the shortlist is then compared with exact arithmetic.
template <std::size_t N>
inline TowerScalar min_squared_distance(const OrbitPolytope<N>& p) {
    const auto& v = p.vertices;
    if (v.size() < 2) throw std::invalid_argument("min_squared_distance: need two vertices");

    detail::ScaledIntSet scaled = detail::scale_to_integers(v);
    std::vector<std::pair<uint32_t, uint32_t>> candidates;
    if (scaled.valid) {
        double dd = scaled.denom.to_double();
        dd = dd * dd;
        static const double bd[8] = {1.0,
                                     1.4142135623730951,
                                     2.23606797749979,
                                     3.1622776601683795,
                                     1.272019649514069,
                                     1.7989074399478673,
                                     2.8444237309713983,
                                     4.022541245406762};
        std::vector<double> norms(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) norms[i] = squared_norm(v[i]).to_double();
        double best = 0;
        bool have = false;
        int64_t acc[8];
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                detail::scaled_dot(scaled, i, j, N, acc);
                double dot2 = 0;
                for (int k = 0; k < 8; ++k)
                    if (acc[k]) dot2 += static_cast<double>(acc[k]) * bd[k];
                double d2 = norms[i] + norms[j] - dot2 / dd;
                double eps = 1e-7 * std::max(1.0, std::abs(d2));
                if (!have || d2 < best - eps) {
                    best = d2;
                    have = true;
                    candidates.clear();
                    candidates.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
                } else if (d2 < best + eps) {
                    if (candidates.size() < 64)
                        candidates.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
                }
            }
        }
    } else {
        for (uint32_t i = 0; i < v.size(); ++i)
            for (uint32_t j = i + 1; j < v.size(); ++j) candidates.push_back({i, j});
    }

    bool have = false;
    TowerScalar bestExact;
    for (auto [i, j] : candidates) {
        TowerScalar d2 = squared_norm(v[i] - v[j]);
        if (d2.is_zero()) continue;
        if (!have || TowerScalar::cmp(d2, bestExact) < 0) {
            bestExact = d2;
            have = true;
        }
    }
    if (!have) throw std::invalid_argument("min_squared_distance: all vertices coincide");
    return bestExact;
}

// ---------------------------------------------------------------------------
// Named E8 orbits. 421 is the root polytope; 241 and 142 are the fundamental
// weight orbits of the D7- and A7-nodes, rescaled so the circumradii are
// exactly 2*sqrt(2) and 4*sqrt(2).
// ---------------------------------------------------------------------------

inline OrbitPolytope<8> e8_orbit(const std::string& which, bool with_edges = false,
                                 unsigned threads = 0) {
    GroupSpec<8> e8 = group_e8();
    auto weights = fundamental_weights(e8);
    Vec8 seed;
    if (which == "421") {
        seed = weights[7];  // norm^2 = 2
    } else if (which == "241") {
        seed = TowerScalar::sqrt2() * weights[0];  // norm^2: 4 -> 8
    } else if (which == "142") {
        seed = TowerScalar(2) * weights[1];  // norm^2: 8 -> 32
    } else {
        throw std::invalid_argument("e8_orbit: unknown orbit " + which);
    }
    OrbitPolytope<8> p = weyl_orbit(e8, seed);
    p.orbit = which;
    if (with_edges) {
        p.edge_squared_length = min_squared_distance(p);
        p.edges = edge_graph(p, p.edge_squared_length, threads);
    }
    return p;
}

}  // namespace e8fold
