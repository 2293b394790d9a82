#pragma once

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "e8fold/geom.hpp"
#include "e8fold/io.hpp"
#include "e8fold/polytopes.hpp"

namespace e8fold {

struct RunConfig {
    std::string command;            // generate | fold | verify | project | export | tables
    std::string group = "E8";
    std::string orbit;              // named orbit (421/241/142) or ringed-node bits
    std::string construction;       // named quaternion construction
    std::string input;              // project source or export input path
    std::string format = "json";    // json | csv | svg | off
    std::string out;                // output path; empty writes to stdout
    std::string projection = "petrie";  // petrie | platonic
    std::string table = "default";  // tables: default | footnote | all
    std::string triads;             // tables: custom oriented triads "123,145,..."
    double tolerance = 1e-9;
    double cull_fraction = 0.0;
    bool with_edges = false;
    bool isomorphism = false;       // verify: run the full fold/unfold pipeline
    bool text_table = false;        // fold/verify: human-readable table to stdout
    unsigned threads = 0;
};

inline std::string canonical_config(const RunConfig& c) {
    std::ostringstream s;
    s << "command=" << c.command << ";group=" << c.group << ";orbit=" << c.orbit
      << ";construction=" << c.construction << ";input=" << c.input << ";format=" << c.format
      << ";projection=" << c.projection << ";table=" << c.table << ";triads=" << c.triads
      << ";tolerance=" << format_double(c.tolerance)
      << ";cull=" << format_double(c.cull_fraction) << ";edges=" << c.with_edges
      << ";isomorphism=" << c.isomorphism;
    return s.str();
}

namespace cli_detail {

inline const std::vector<std::string>& known_constructions() {
    static const std::vector<std::string> names = {"T", "Tp", "S",  "Sp", "I",        "Ip",
                                                   "A", "Ap", "J",  "Jp", "F4",       "dual-snub"};
    return names;
}

inline const QuatSet& construction_by_name(const std::string& name) {
    const Constructions& k = constructions();
    static const std::map<std::string, const QuatSet Constructions::*> table = {
        {"T", &Constructions::T},   {"Tp", &Constructions::Tp}, {"S", &Constructions::S},
        {"Sp", &Constructions::Sp}, {"I", &Constructions::I},   {"Ip", &Constructions::Ip},
        {"A", &Constructions::A},   {"Ap", &Constructions::Ap}, {"J", &Constructions::J},
        {"Jp", &Constructions::Jp}, {"F4", &Constructions::F4},
        {"dual-snub", &Constructions::dual_snub}};
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown construction: " + name);
    return k.*(it->second);
}

template <std::size_t N>
VertexDump dump_polytope(const OrbitPolytope<N>& p, const std::string& config) {
    VertexDump d;
    d.group = p.group;
    d.orbit = p.orbit;
    d.config = config;
    for (const Vec<N>& v : p.vertices) {
        std::vector<TowerScalar> row(v.c.begin(), v.c.end());
        d.vertices.push_back(std::move(row));
    }
    if (!p.edges.empty()) {
        d.has_edges = true;
        d.edges = p.edges;
        d.edge_squared_length = p.edge_squared_length.encode();
    }
    return d;
}

inline VertexDump dump_quatset(const QuatSet& s, const std::string& config) {
    VertexDump d;
    d.group = "H4";
    d.orbit = s.label;
    d.config = config;
    for (const Quaternion& q : s.elems) {
        std::vector<TowerScalar> row(q.c.begin(), q.c.end());
        d.vertices.push_back(std::move(row));
    }
    return d;
}

// Generic-group orbit from ringed-node bits.
inline std::optional<VertexDump> orbit_dump(const RunConfig& cfg, const std::string& config,
                                            std::ostream& err) {
    auto finish = [&](auto poly) -> VertexDump {
        if (cfg.with_edges) {
            poly.edge_squared_length = min_squared_distance(poly);
            err << "computing edge graph over " << poly.vertices.size() << " vertices\n";
            poly.edges = edge_graph(poly, poly.edge_squared_length, cfg.threads);
        }
        return dump_polytope(poly, config);
    };
    if (cfg.group == "E8") {
        if (cfg.orbit == "421" || cfg.orbit == "241" || cfg.orbit == "142") {
            OrbitPolytope<8> p = e8_orbit(cfg.orbit, false);
            return finish(std::move(p));
        }
        GroupSpec<8> g = group_e8();
        OrbitPolytope<8> p = weyl_orbit(g, weight_for_label(g, OrbitLabel::from_string(cfg.orbit)));
        p.orbit = cfg.orbit;
        return finish(std::move(p));
    }
    auto run4 = [&](const GroupSpec<4>& g) {
        OrbitPolytope<4> p = weyl_orbit(g, weight_for_label(g, OrbitLabel::from_string(cfg.orbit)));
        p.orbit = cfg.orbit;
        return finish(std::move(p));
    };
    auto run8 = [&](const GroupSpec<8>& g) {
        OrbitPolytope<8> p = weyl_orbit(g, weight_for_label(g, OrbitLabel::from_string(cfg.orbit)));
        p.orbit = cfg.orbit;
        return finish(std::move(p));
    };
    if (cfg.group == "A3") return run4(group_a3());
    if (cfg.group == "B3") return run4(group_b3());
    if (cfg.group == "H3") return run4(group_h3());
    if (cfg.group == "D4") return run4(group_d4());
    if (cfg.group == "F4") return run4(group_f4());
    if (cfg.group == "H4") return run4(group_h4());
    if (cfg.group == "A4") return run8(group_a4());
    if (cfg.group == "D6") return run8(group_d6());
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism table and verification report.
// ---------------------------------------------------------------------------

struct IsomorphismRow {
    uint32_t index;
    Vec8 root;
    Vec4 left, right;
    bool left_small, right_small;
    bool t_class;
    bool star;  // unit-rescaled snub-class left half satisfies the seed constraint
};

inline std::vector<IsomorphismRow> isomorphism_rows(const FoldContext& ctx,
                                                    const H4Decomposition& d) {
    std::vector<IsomorphismRow> rows;
    rows.reserve(d.pairs.size());
    TowerScalar up = TowerScalar::sqrt_phi(), down = inv_sqrt_phi();
    for (uint32_t i = 0; i < d.pairs.size(); ++i) {
        const FoldPair& fp = d.pairs[i];
        IsomorphismRow r;
        r.index = i;
        r.root = d.roots[i];
        r.left = fp.left;
        r.right = fp.right;
        r.left_small = fp.norm_class_left == NormClass::small;
        r.right_small = fp.norm_class_right == NormClass::small;
        r.t_class = fp.t_class;
        Quaternion unit_left =
            from_vec4((fp.norm_class_left == NormClass::small ? up : down) * fp.left);
        r.star = !fp.t_class && satisfies_seed_constraint(unit_left);
        rows.push_back(r);
    }
    (void)ctx;
    return rows;
}

struct VerifyReport {
    UPropertyReport u;
    bool gates_match = false;
    bool copies_sizes = false;
    bool phi_scaling = false;
    bool t_counts = false;
    bool copies_600cell_edges = false;
    bool unit_copy_is_icosian = false;
    bool maplr_involution = false;
    bool maplr_t_reversal = false;
    bool maplr_class_swap = false;
    bool unfold_roundtrip = false;
    bool j_cover_multiplicity4 = false;
    ExpIUReport exp_iu;
    bool exp_unitary = false;
    bool exp_im_traceless = false;
    bool exp_re_trace_near_4 = false;
    bool all_pass() const {
        return u.all_pass() && gates_match && copies_sizes && phi_scaling && t_counts &&
               copies_600cell_edges && unit_copy_is_icosian && maplr_involution &&
               maplr_t_reversal && maplr_class_swap && unfold_roundtrip &&
               j_cover_multiplicity4 && exp_unitary && exp_im_traceless && exp_re_trace_near_4;
    }
};

inline VerifyReport run_verification() {
    VerifyReport rep;
    rep.u = u_property_report();
    rep.gates_match = build_U_from_gates() == build_U() && u_central_block_zero_structure(build_U());

    FoldContext ctx;
    OrbitPolytope<8> roots = e8_roots_direct();
    H4Decomposition d = decompose(ctx, roots);
    rep.copies_sizes = d.h4l.size() == 120 && d.phi_h4l.size() == 120 && d.h4r.size() == 120 &&
                       d.phi_h4r.size() == 120;

    auto scaled_equal = [](const std::vector<Vec4>& unit, const std::vector<Vec4>& big) {
        std::vector<Vec4> s;
        s.reserve(unit.size());
        for (const Vec4& v : unit) s.push_back(TowerScalar::phi() * v);
        detail::sort4(s);
        return s == big;
    };
    rep.phi_scaling = scaled_equal(d.h4l, d.phi_h4l) && scaled_equal(d.h4r, d.phi_h4r);

    int t_small = 0, t_large = 0;
    for (const FoldPair& fp : d.pairs)
        if (fp.t_class) (fp.norm_class_left == NormClass::small ? t_small : t_large)++;
    rep.t_counts = t_small == 24 && t_large == 24;

    rep.copies_600cell_edges = true;
    for (const auto* copy : {&d.h4l, &d.phi_h4l, &d.h4r, &d.phi_h4r}) {
        OrbitPolytope<4> p;
        p.vertices = *copy;
        p.compute_shells();
        if (edge_graph(p, min_squared_distance(p)).size() != 720) rep.copies_600cell_edges = false;
    }

    auto unit = normalized_copy(d.h4l, NormClass::small);
    {
        std::vector<Quaternion> uq;
        uq.reserve(unit.size());
        for (const Vec4& v : unit) uq.push_back(from_vec4(v));
        rep.unit_copy_is_icosian = dedup_sorted(std::move(uq)) == constructions().I.elems;
    }

    MapLR m = MapLR::build(d);
    rep.maplr_involution = true;
    rep.maplr_t_reversal = true;
    rep.maplr_class_swap = true;
    for (const FoldPair& fp : d.pairs) {
        if (m.apply(m.apply(fp.left)) != fp.left) rep.maplr_involution = false;
        Vec4 image = m.apply(fp.left);
        if (fp.t_class) {
            Vec4 rev;
            for (int i = 0; i < 4; ++i) rev[i] = fp.left[3 - i];
            bool ok = fp.norm_class_left == NormClass::large ? image == rev : image == -rev;
            if (!ok) rep.maplr_t_reversal = false;
        } else if (squared_norm(image) == squared_norm(fp.left)) {
            rep.maplr_class_swap = false;
        }
    }

    rep.unfold_roundtrip = unfold(ctx, m, unit) == roots.vertices;

    // Root -> J covering with multiset multiplicity 4.
    {
        const Constructions& k = constructions();
        TowerScalar up = TowerScalar::sqrt_phi(), down = inv_sqrt_phi();
        std::vector<Quaternion> incid;
        incid.reserve(2400);
        bool members = true;
        for (const FoldPair& fp : d.pairs) {
            Quaternion vl =
                from_vec4((fp.norm_class_left == NormClass::small ? up : down) * fp.left);
            Quaternion vr =
                from_vec4((fp.norm_class_right == NormClass::small ? up : down) * fp.right);
            for (const Quaternion& a : k.Ap.elems) {
                Quaternion jl = a * vl, jr = a * vr;
                if (!k.J.contains(jl) || !k.J.contains(jr)) members = false;
                incid.push_back(jl);
                incid.push_back(jr);
            }
        }
        std::sort(incid.begin(), incid.end(),
                  [](const Quaternion& a, const Quaternion& b) { return lex_cmp(a, b) < 0; });
        std::size_t distinct = 0;
        int run = 1;
        bool uniform = true;
        for (std::size_t i = 1; i <= incid.size(); ++i) {
            if (i < incid.size() && incid[i] == incid[i - 1]) {
                ++run;
            } else {
                ++distinct;
                if (run != 4) uniform = false;
                run = 1;
            }
        }
        rep.j_cover_multiplicity4 = members && uniform && distinct == 600;
    }

    rep.exp_iu = exp_iU_numeric(build_U());
    rep.exp_unitary = rep.exp_iu.unitarity_residual < 1e-12;
    rep.exp_im_traceless = std::abs(rep.exp_iu.im_trace) < 1e-12;
    rep.exp_re_trace_near_4 = std::abs(rep.exp_iu.re_trace - 4.0) < 0.5;
    return rep;
}

inline json verify_report_to_json(const VerifyReport& r, const std::string& config) {
    json j;
    j["format"] = "e8fold-verify/1";
    j["meta"] = {{"tool", kToolVersion}, {"config", config}, {"confighash", config_hash(config)}};
    j["u"] = {{"symmetric", r.u.symmetric_u},
              {"traceless", r.u.traceless_u},
              {"det_one", r.u.det_one_u},
              {"charpoly_palindromic", r.u.palindromic_u},
              {"inverse_exact", r.u.inverse_exact},
              {"inverse_is_phi_exchange", r.u.exchange_rule},
              {"inverse_symmetric", r.u.symmetric_uinv},
              {"inverse_det_one", r.u.det_one_uinv},
              {"inverse_charpoly_palindromic", r.u.palindromic_uinv},
              {"gates_assembly_match", r.gates_match}};
    json cp = json::array();
    for (const TowerScalar& c : r.u.charpoly_u.coeff) cp.push_back(c.encode());
    j["u"]["charpoly"] = cp;
    j["fold"] = {{"four_copies_of_120", r.copies_sizes},
                 {"phi_scaled_copies", r.phi_scaling},
                 {"t_class_24_per_scale", r.t_counts},
                 {"copies_have_720_edges", r.copies_600cell_edges},
                 {"unit_copy_is_icosian", r.unit_copy_is_icosian}};
    j["maplr"] = {{"involution", r.maplr_involution},
                  {"t_class_reversal_signs", r.maplr_t_reversal},
                  {"norm_class_swap", r.maplr_class_swap}};
    j["unfold"] = {{"roundtrip_exact", r.unfold_roundtrip}};
    j["j_cover"] = {{"uniform_multiplicity_4", r.j_cover_multiplicity4}};
    j["exp_iu"] = {{"unitarity_residual", format_double(r.exp_iu.unitarity_residual)},
                   {"re_trace", format_double(r.exp_iu.re_trace)},
                   {"im_trace", format_double(r.exp_iu.im_trace)},
                   {"unitary", r.exp_unitary},
                   {"im_traceless", r.exp_im_traceless},
                   {"re_trace_near_4", r.exp_re_trace_near_4}};
    j["pass"] = r.all_pass();
    return j;
}

inline json isomorphism_table_json(const std::vector<IsomorphismRow>& rows,
                                   const std::string& config) {
    json j;
    j["format"] = "e8fold-isomorphism/1";
    j["meta"] = {{"tool", kToolVersion}, {"config", config}, {"confighash", config_hash(config)}};
    json out = json::array();
    for (const IsomorphismRow& r : rows) {
        json row;
        row["index"] = r.index;
        json root = json::array();
        for (int i = 0; i < 8; ++i) root.push_back(r.root[i].encode());
        row["root"] = root;
        json left = json::array(), right = json::array();
        for (int i = 0; i < 4; ++i) left.push_back(r.left[i].encode());
        for (int i = 0; i < 4; ++i) right.push_back(r.right[i].encode());
        row["left"] = left;
        row["right"] = right;
        row["norm_class_left"] = r.left_small ? "small" : "large";
        row["norm_class_right"] = r.right_small ? "small" : "large";
        row["t_24cell"] = r.t_class;
        row["star"] = r.star;
        out.push_back(row);
    }
    j["rows"] = std::move(out);
    return j;
}

inline std::string isomorphism_table_text(const std::vector<IsomorphismRow>& rows) {
    std::ostringstream out;
    out << "  idx | root (float)                                      | L (float)             "
           "| R (float)             | nL nR | T | *\n";
    char buf[64];
    for (const IsomorphismRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%5u | ", r.index);
        out << buf;
        for (int i = 0; i < 8; ++i) {
            std::snprintf(buf, sizeof buf, "%5.2f ", r.root[i].to_double());
            out << buf;
        }
        out << "| ";
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "%5.2f ", r.left[i].to_double());
            out << buf;
        }
        out << "| ";
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "%5.2f ", r.right[i].to_double());
            out << buf;
        }
        out << "| " << (r.left_small ? 's' : 'L') << "  " << (r.right_small ? 's' : 'L') << "  | "
            << (r.t_class ? 'T' : ' ') << " | " << (r.star ? '*' : ' ') << "\n";
    }
    return out.str();
}

}  // namespace cli_detail

// ---------------------------------------------------------------------------
// Command dispatch. Returns the process exit status; writes files or stdout.
// ---------------------------------------------------------------------------

inline void validate(const RunConfig& cfg) {
    static const std::vector<std::string> commands = {"generate", "fold",   "verify",
                                                      "project",  "export", "tables"};
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
        throw std::invalid_argument("unknown command: " + cfg.command);
    static const std::vector<std::string> formats = {"json", "csv", "svg", "off"};
    if (std::find(formats.begin(), formats.end(), cfg.format) == formats.end())
        throw std::invalid_argument("unknown format: " + cfg.format);
    if (cfg.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (cfg.cull_fraction < 0 || cfg.cull_fraction >= 1)
        throw std::invalid_argument("cull fraction must lie in [0, 1)");
    if (cfg.command == "generate" && cfg.construction.empty() && cfg.orbit.empty())
        throw std::invalid_argument("generate needs --orbit or --construction");
    if (cfg.command == "project" && cfg.projection != "petrie" && cfg.projection != "platonic")
        throw std::invalid_argument("projection must be petrie or platonic");
    if (cfg.command == "export" && cfg.input.empty())
        throw std::invalid_argument("export needs --in");
}

inline int run(const RunConfig& cfg, std::ostream& out_stream = std::cout,
               std::ostream& err = std::cerr) {
    validate(cfg);
    const std::string config = canonical_config(cfg);
    auto emit = [&](const std::string& content) {
        if (cfg.out.empty())
            out_stream << content;
        else
            write_file(cfg.out, content);
    };

    if (cfg.command == "generate") {
        VertexDump dump;
        if (!cfg.construction.empty()) {
            dump = cli_detail::dump_quatset(cli_detail::construction_by_name(cfg.construction),
                                            config);
        } else {
            auto d = cli_detail::orbit_dump(cfg, config, err);
            if (!d) throw std::invalid_argument("unknown group: " + cfg.group);
            dump = std::move(*d);
        }
        emit(cfg.format == "csv" ? vertices_to_csv(dump) : render_json(vertices_to_json(dump)));
        return 0;
    }

    if (cfg.command == "fold") {
        FoldContext ctx;
        H4Decomposition d = decompose(ctx, e8_roots_direct());
        auto rows = cli_detail::isomorphism_rows(ctx, d);
        if (cfg.text_table) out_stream << cli_detail::isomorphism_table_text(rows);
        emit(render_json(cli_detail::isomorphism_table_json(rows, config)));
        return 0;
    }

    if (cfg.command == "verify") {
        cli_detail::VerifyReport rep = cli_detail::run_verification();
        if (cfg.text_table) {
            FoldContext ctx;
            H4Decomposition d = decompose(ctx, e8_roots_direct());
            out_stream << cli_detail::isomorphism_table_text(cli_detail::isomorphism_rows(ctx, d));
        }
        emit(render_json(cli_detail::verify_report_to_json(rep, config)));
        return rep.all_pass() ? 0 : 2;
    }

    if (cfg.command == "project") {
        std::string source = cfg.input.empty() ? cfg.orbit : cfg.input;
        bool is_orbit = source == "421" || source == "241" || source == "142";
        if (cfg.projection == "petrie") {
            std::vector<std::vector<double>> pts;
            std::vector<std::pair<uint32_t, uint32_t>> edges;
            if (is_orbit) {
                OrbitPolytope<8> p = e8_orbit(source, cfg.with_edges, cfg.threads);
                ProjectionBasis b = e8_petrie_basis();
                b.rows.resize(2);
                pts = project(p.vertices, b);
                edges = p.edges;
            } else {
                const QuatSet& s = cli_detail::construction_by_name(source);
                ProjectionBasis b = h4_petrie_basis();
                b.rows.resize(2);
                std::vector<Vec4> verts;
                verts.reserve(s.size());
                for (const Quaternion& q : s.elems) verts.push_back(to_vec4(q));
                pts = project(verts, b);
            }
            if (cfg.format == "svg") {
                SvgOptions opt;
                opt.cull_fraction = cfg.cull_fraction;
                opt.config = config;
                emit(write_svg(pts, edges, opt));
            } else {
                json j;
                j["format"] = "e8fold-projection/1";
                j["meta"] = {{"tool", kToolVersion},
                             {"config", config},
                             {"confighash", config_hash(config)},
                             {"source", source},
                             {"projection", "petrie"}};
                json arr = json::array();
                for (auto& p : pts)
                    arr.push_back(json::array({format_double(p[0]), format_double(p[1])}));
                j["points"] = arr;
                emit(render_json(j));
            }
            return 0;
        }
        // Platonic 3D projection with norm shells.
        std::vector<std::array<double, 3>> pts;
        std::vector<std::vector<uint32_t>> shells;
        if (is_orbit) {
            OrbitPolytope<8> p = e8_orbit(source, false);
            pts = platonic_3d(p.vertices);
            for (auto& [n2, idx] : platonic_shells_exact(p.vertices)) shells.push_back(idx);
        } else {
            const QuatSet& s = cli_detail::construction_by_name(source);
            std::vector<std::vector<double>> flat;
            for (const Quaternion& q : s.elems) {
                // Imaginary-part shadow of the quaternion set.
                pts.push_back({q.c[1].to_double(), q.c[2].to_double(), q.c[3].to_double()});
                flat.push_back({pts.back()[0], pts.back()[1], pts.back()[2]});
            }
            ShellPartition part = shell_partition(flat, cfg.tolerance);
            for (auto& g : part.groups) shells.push_back(g.indices);
        }
        if (cfg.format == "off") {
            emit(write_off(pts, shells, config));
        } else {
            json j;
            j["format"] = "e8fold-projection/1";
            j["meta"] = {{"tool", kToolVersion},
                         {"config", config},
                         {"confighash", config_hash(config)},
                         {"source", source},
                         {"projection", "platonic"}};
            json arr = json::array();
            for (auto& p : pts)
                arr.push_back(json::array(
                    {format_double(p[0]), format_double(p[1]), format_double(p[2])}));
            j["points"] = arr;
            json sh = json::array();
            for (auto& s : shells) {
                json g = json::array();
                for (uint32_t i : s) g.push_back(i);
                sh.push_back(g);
            }
            j["shells"] = sh;
            emit(render_json(j));
        }
        return 0;
    }

    if (cfg.command == "export") {
        json j = json::parse(read_file(cfg.input));
        VertexDump dump = vertices_from_json(j);
        emit(cfg.format == "csv" ? vertices_to_csv(dump) : render_json(vertices_to_json(dump)));
        return 0;
    }

    // tables
    if (cfg.table == "all") {
        auto tables = enumerate_octonion_tables();
        json j;
        j["format"] = "e8fold-octonion-tables/1";
        j["meta"] = {{"tool", kToolVersion}, {"config", config}, {"confighash", config_hash(config)}};
        j["count"] = tables.size();
        json arr = json::array();
        for (const OctTable& t : tables) {
            arr.push_back(json{{"triads", t.triads_string()},
                               {"quadrant_closed", t.quadrant_closed()},
                               {"palindromic", is_palindromic_table(t)}});
        }
        j["tables"] = arr;
        emit(render_json(j));
        return 0;
    }
    OctTable t = default_oct_table();
    if (cfg.table == "footnote") {
        t = footnote_oct_table();
    } else if (cfg.table != "default" || !cfg.triads.empty()) {
        std::string spec = cfg.triads.empty() ? cfg.table : cfg.triads;
        std::array<Triad, 7> triads{};
        std::size_t pos = 0;
        for (int k = 0; k < 7; ++k) {
            std::size_t next = spec.find(',', pos);
            std::string tok = next == std::string::npos ? spec.substr(pos) : spec.substr(pos, next - pos);
            if (tok.size() != 3) throw std::invalid_argument("tables: bad triad token " + tok);
            triads[k] = {tok[0] - '0', tok[1] - '0', tok[2] - '0'};
            pos = next == std::string::npos ? spec.size() : next + 1;
        }
        t = select_table(triads);
    }
    if (cfg.format == "csv") {
        emit(oct_table_to_csv(t.idx, t.sgn, t.triads_string(), config));
    } else {
        json j;
        j["format"] = "e8fold-octonion-table/1";
        j["meta"] = {{"tool", kToolVersion}, {"config", config}, {"confighash", config_hash(config)}};
        j["triads"] = t.triads_string();
        j["quadrant_closed"] = t.quadrant_closed();
        j["palindromic"] = is_palindromic_table(t);
        json grid = json::array();
        for (int i = 0; i < 8; ++i) {
            json row = json::array();
            for (int k = 0; k < 8; ++k) row.push_back(int(t.sgn[i][k]) * int(t.idx[i][k]));
            grid.push_back(row);
        }
        j["grid"] = grid;
        emit(render_json(j));
    }
    return 0;
}

}  // namespace e8fold
