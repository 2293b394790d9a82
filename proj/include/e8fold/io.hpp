#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "e8fold/exactfield.hpp"

namespace e8fold {

inline constexpr const char* kToolVersion = "e8fold 1.0.0";

using json = nlohmann::ordered_json;

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string config_hash(const std::string& canonical_config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_config)));
    return buf;
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Exact vertex dump with optional edges; coordinates are tower-scalar
// encodings in basis order.
struct VertexDump {
    std::string group;
    std::string orbit;
    std::string config;  // canonical CLI configuration string
    std::vector<std::vector<TowerScalar>> vertices;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    bool has_edges = false;
    std::string edge_squared_length;  // encoded, empty if unset
};

inline json vertices_to_json(const VertexDump& dump) {
    json j;
    j["format"] = "e8fold-vertices/1";
    j["meta"] = json::object();
    j["meta"]["tool"] = kToolVersion;
    j["meta"]["config"] = dump.config;
    j["meta"]["confighash"] = config_hash(dump.config);
    j["meta"]["group"] = dump.group;
    j["meta"]["orbit"] = dump.orbit;
    j["meta"]["vertex_count"] = dump.vertices.size();
    if (dump.has_edges) {
        j["meta"]["edge_count"] = dump.edges.size();
        j["meta"]["edge_squared_length"] = dump.edge_squared_length;
    }
    j["basis"] = {"1", "sqrt2", "sqrt5", "sqrt10", "sqrtphi", "sqrt2*sqrtphi", "sqrt5*sqrtphi",
                  "sqrt10*sqrtphi"};
    json verts = json::array();
    for (const auto& v : dump.vertices) {
        json coords = json::array();
        for (const TowerScalar& x : v) {
            json fields = json::array();
            for (const Rational& r : x.coeffs()) fields.push_back(r.to_string());
            coords.push_back(fields);
        }
        verts.push_back(coords);
    }
    j["vertices"] = std::move(verts);
    json floats = json::array();
    for (const auto& v : dump.vertices) {
        json coords = json::array();
        for (const TowerScalar& x : v) coords.push_back(format_double(x.to_double()));
        floats.push_back(coords);
    }
    j["vertices_float"] = std::move(floats);
    if (dump.has_edges) {
        json edges = json::array();
        for (auto [a, b] : dump.edges) edges.push_back(json::array({a, b}));
        j["edges"] = std::move(edges);
    }
    return j;
}

inline VertexDump vertices_from_json(const json& j) {
    if (!j.contains("format") || j["format"] != "e8fold-vertices/1")
        throw std::invalid_argument("vertex dump: unknown format");
    VertexDump dump;
    dump.group = j["meta"].value("group", "");
    dump.orbit = j["meta"].value("orbit", "");
    dump.config = j["meta"].value("config", "");
    for (const auto& vj : j["vertices"]) {
        std::vector<TowerScalar> v;
        for (const auto& cj : vj) {
            std::array<Rational, 8> cs;
            if (cj.size() != 8) throw std::invalid_argument("vertex dump: coordinate arity");
            for (int k = 0; k < 8; ++k) cs[k] = Rational::from_string(cj[k].get<std::string>());
            v.push_back(TowerScalar::from_coeffs(cs));
        }
        dump.vertices.push_back(std::move(v));
    }
    if (j.contains("edges")) {
        dump.has_edges = true;
        dump.edge_squared_length = j["meta"].value("edge_squared_length", "");
        for (const auto& ej : j["edges"])
            dump.edges.push_back({ej[0].get<uint32_t>(), ej[1].get<uint32_t>()});
    }
    return dump;
}

inline std::string render_json(const json& j) { return j.dump(2) + "\n"; }

inline std::string vertices_to_csv(const VertexDump& dump) {
    std::ostringstream out;
    out << "# " << kToolVersion << " confighash=" << config_hash(dump.config) << "\n";
    out << "# group=" << dump.group << " orbit=" << dump.orbit << "\n";
    std::size_t dim = dump.vertices.empty() ? 0 : dump.vertices[0].size();
    out << "index";
    for (std::size_t c = 0; c < dim; ++c) out << ",exact" << c;
    for (std::size_t c = 0; c < dim; ++c) out << ",float" << c;
    out << "\n";
    for (std::size_t i = 0; i < dump.vertices.size(); ++i) {
        out << i;
        for (const TowerScalar& x : dump.vertices[i]) out << "," << x.encode();
        for (const TowerScalar& x : dump.vertices[i]) out << "," << format_double(x.to_double());
        out << "\n";
    }
    if (dump.has_edges) {
        out << "# edges squared_length=" << dump.edge_squared_length << "\n";
        for (auto [a, b] : dump.edges) out << "edge," << a << "," << b << "\n";
    }
    return out.str();
}

// 8x8 signed-index multiplication grid as CSV rows e0..e7.
inline std::string oct_table_to_csv(const int8_t idx[8][8], const int8_t sgn[8][8],
                                    const std::string& triads, const std::string& config) {
    std::ostringstream out;
    out << "# " << kToolVersion << " confighash=" << config_hash(config) << "\n";
    out << "# triads=" << triads << "\n";
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (j) out << ",";
            int v = sgn[i][j] * idx[i][j];
            out << (sgn[i][j] < 0 && idx[i][j] == 0 ? "-0" : std::to_string(v));
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// SVG writer: 2D point/edge cloud.
// ---------------------------------------------------------------------------

struct SvgOptions {
    double size = 1000.0;          // canvas edge in px
    double margin = 20.0;
    double point_radius = 1.6;
    double cull_fraction = 0.0;    // fraction of innermost edges dropped
    std::string config;
};

inline std::string write_svg(const std::vector<std::vector<double>>& points,
                             const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                             const SvgOptions& opt) {
    if (opt.cull_fraction < 0.0 || opt.cull_fraction >= 1.0)
        throw std::invalid_argument("svg: cull fraction must lie in [0, 1)");
    double maxr = 1e-12;
    for (const auto& p : points) maxr = std::max(maxr, std::hypot(p[0], p[1]));
    double scale = (opt.size / 2 - opt.margin) / maxr;
    auto sx = [&](double x) { return opt.size / 2 + scale * x; };
    auto sy = [&](double y) { return opt.size / 2 - scale * y; };

    // Cull the innermost edges by projected midpoint radius.
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& a = points[edges[i].first];
        const auto& b = points[edges[i].second];
        order.push_back({std::hypot((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), i});
    }
    std::sort(order.begin(), order.end());
    std::size_t skip = static_cast<std::size_t>(opt.cull_fraction * static_cast<double>(order.size()));

    std::ostringstream out;
    char buf[160];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- " << kToolVersion << " confighash=" << config_hash(opt.config) << " -->\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  opt.size, opt.size, opt.size, opt.size);
    out << buf;
    out << "<g stroke=\"#4060a0\" stroke-width=\"0.25\" stroke-opacity=\"0.55\">\n";
    for (std::size_t k = skip; k < order.size(); ++k) {
        const auto& e = edges[order[k].second];
        const auto& a = points[e.first];
        const auto& b = points[e.second];
        std::snprintf(buf, sizeof buf, "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\"/>\n",
                      sx(a[0]), sy(a[1]), sx(b[0]), sy(b[1]));
        out << buf;
    }
    out << "</g>\n<g fill=\"#202020\">\n";
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.2f\"/>\n", sx(p[0]),
                      sy(p[1]), opt.point_radius);
        out << buf;
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// OFF writer: 3D points grouped by shell, one comment-delimited object each.
// ---------------------------------------------------------------------------

inline std::string write_off(const std::vector<std::array<double, 3>>& points,
                             const std::vector<std::vector<uint32_t>>& shells,
                             const std::string& config) {
    std::ostringstream out;
    out << "OFF\n";
    out << "# " << kToolVersion << " confighash=" << config_hash(config) << "\n";
    std::size_t total = 0;
    for (const auto& s : shells) total += s.size();
    out << total << " 0 0\n";
    char buf[96];
    for (std::size_t s = 0; s < shells.size(); ++s) {
        out << "# shell " << s << " count " << shells[s].size() << "\n";
        for (uint32_t idx : shells[s]) {
            std::snprintf(buf, sizeof buf, "%.12f %.12f %.12f\n", points[idx][0], points[idx][1],
                          points[idx][2]);
            out << buf;
        }
    }
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("failed writing output file: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace e8fold
