#pragma once

#include "io.hpp"

#include <array>
#include <sstream>

namespace drops {

struct Anchor {
    double x = 0.0;
    double y = 0.0;
};

namespace layouts {

struct Entry {
    const char* name;
    double x, y;
};

// Droplet anchors keyed by label name. Three spins: triangle with the identity at
// the centroid, linear terms at the vertices, bilinear terms at the edge midpoints
// and the trilinear row above.
inline constexpr std::array<Entry, 11> three_spin = {{
    {"Id", 0.0, 0.577350269189626},
    {"{1}", -1.0, 0.0},
    {"{2}", 1.0, 0.0},
    {"{3}", 0.0, 1.732050807568877},
    {"{1,2}", 0.0, 0.0},
    {"{1,3}", -0.5, 0.866025403784439},
    {"{2,3}", 0.5, 0.866025403784439},
    {"{1,2,3}(t1)", -1.5, 2.6},
    {"{1,2,3}(t2)", -0.5, 2.6},
    {"{1,2,3}(t3)", 0.5, 2.6},
    {"{1,2,3}(t4)", 1.5, 2.6},
}};

// Two spins: a segment with the identity at its middle and the bilinear term above.
inline constexpr std::array<Entry, 4> two_spin = {{
    {"Id", 0.0, 0.0},
    {"{1}", -1.0, 0.0},
    {"{2}", 1.0, 0.0},
    {"{1,2}", 0.0, 1.0},
}};

inline constexpr std::array<Entry, 2> one_spin = {{
    {"Id", 0.0, 0.0},
    {"{1}", 1.0, 0.0},
}};

}  // namespace layouts

inline std::optional<Anchor> fixed_anchor(int n, const std::string& name) {
    auto look = [&](const auto& table) -> std::optional<Anchor> {
        for (const auto& e : table)
            if (name == e.name) return Anchor{e.x, e.y};
        return std::nullopt;
    };
    if (n == 1) return look(layouts::one_spin);
    if (n == 2) return look(layouts::two_spin);
    if (n == 3) return look(layouts::three_spin);
    return std::nullopt;
}

// Generic rows: one row per linearity, labels left to right in basis order.
inline std::map<DropLabel, Anchor> lisa_layout(const std::vector<DropLabel>& labels, int n) {
    std::map<DropLabel, Anchor> out;
    std::map<int, int> per_row, seen;
    for (const auto& l : labels) ++per_row[l.linearity()];
    for (const auto& l : labels) {
        if (auto a = fixed_anchor(n, l.str())) {
            out[l] = *a;
            continue;
        }
        const int g = l.linearity();
        const int k = seen[g]++;
        out[l] = {k - 0.5 * (per_row[g] - 1), static_cast<double>(g)};
    }
    return out;
}

// Transition matrix: column = source block, row = target block.
inline std::map<MultipoleLabel, Anchor> multipole_layout(const CoupledBasis& cb) {
    std::map<MultipoleLabel, Anchor> out;
    for (std::size_t p = 0; p < cb.blocks.size(); ++p)
        for (std::size_t q = 0; q < cb.blocks.size(); ++q)
            out[{cb.blocks[p], cb.blocks[q]}] = {static_cast<double>(p), -static_cast<double>(q)};
    return out;
}

struct GridSpec {
    int n_theta = 64;
    int n_phi = 128;
};

// theta_i = pi i/(n_theta-1), phi_k = 2 pi k/n_phi; radius and phase are row-major
// with theta as the slow index.
struct DropletMesh {
    json label;
    std::string name;
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<double> radius;
    std::vector<double> phase;
};

struct LayoutEntry {
    json label;
    std::string name;
    Anchor anchor;
};

struct Scene {
    std::string basis = "lisa";
    int n = 0;
    int step = 0;
    std::vector<LayoutEntry> layout;
    std::vector<DropletMesh> meshes;
};

// Phase in (-pi, pi]; imaginary parts at rounding level are dropped so real values
// get phase 0 or pi deterministically.
inline std::pair<double, double> polar_sample(cplx v) {
    const double r = std::abs(v);
    if (r < 1e-13) return {r, 0.0};
    if (std::abs(v.imag()) < 1e-13 * r) v = {v.real(), 0.0};
    double ph = std::arg(v);
    if (ph <= -std::numbers::pi) ph = std::numbers::pi;
    return {r, ph};
}

namespace detail {

template <class Label, class Namer, class Anchors>
Scene build_scene(const Spectrum<Label>& s, const std::string& kind, int step, const GridSpec& grid,
                  Namer name_of, const Anchors& anchors, double empty_tol) {
    if (grid.n_theta < 2 || grid.n_phi < 3) throw Error("scene grid too small");
    Scene sc;
    sc.basis = kind;
    sc.n = s.n;
    sc.step = step;
    for (const auto& [l, a] : anchors) sc.layout.push_back({label_json(l), name_of(l), a});
    std::vector<double> th(grid.n_theta), ph(grid.n_phi);
    for (int i = 0; i < grid.n_theta; ++i) th[i] = std::numbers::pi * i / (grid.n_theta - 1);
    for (int k = 0; k < grid.n_phi; ++k) ph[k] = 2.0 * std::numbers::pi * k / grid.n_phi;
    for (const auto& l : s.nonempty(empty_tol)) {
        DropletMesh m;
        m.label = label_json(l);
        m.name = name_of(l);
        m.theta = th;
        m.phi = ph;
        for (const auto& smp : sample_droplet(s, l, grid.n_theta, grid.n_phi)) {
            const auto [r, p] = polar_sample(smp.value);
            m.radius.push_back(r);
            m.phase.push_back(p);
        }
        sc.meshes.push_back(std::move(m));
    }
    return sc;
}

}  // namespace detail

inline Scene make_scene(const DropletSpectrum& s, int step = 0, const GridSpec& grid = {}, double empty_tol = 1e-12) {
    std::vector<DropLabel> labels;
    for (const auto& [l, t] : s.droplets) labels.push_back(l);
    if (s.n >= 1 && s.n <= 5)
        for (const auto& l : lisa_basis(s.n)->labels())
            if (!s.droplets.count(l)) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    return detail::build_scene(s, "lisa", step, grid, [](const DropLabel& l) { return l.str(); },
                               lisa_layout(labels, s.n), empty_tol);
}

inline Scene make_scene(const Spectrum<MultipoleLabel>& s, const MultipoleBasis& mb, int step = 0,
                        const GridSpec& grid = {}, double empty_tol = 1e-12) {
    return detail::build_scene(s, "multipole", step, grid, [&](const MultipoleLabel& l) { return mb.name(l); },
                               multipole_layout(mb.states), empty_tol);
}

inline json scene_json(const Scene& sc) {
    json out;
    json meta;
    meta["basis"] = sc.basis;
    meta["n"] = sc.n;
    meta["step"] = sc.step;
    out["metadata"] = meta;
    json lay = json::array();
    for (const auto& e : sc.layout) {
        json j;
        j["label"] = e.label;
        j["name"] = e.name;
        j["anchor"] = json::array({e.anchor.x, e.anchor.y});
        lay.push_back(std::move(j));
    }
    out["layout"] = std::move(lay);
    json meshes = json::array();
    for (const auto& m : sc.meshes) {
        json j;
        j["label"] = m.label;
        j["name"] = m.name;
        j["theta"] = m.theta;
        j["phi"] = m.phi;
        j["radius"] = m.radius;
        j["phase"] = m.phase;
        meshes.push_back(std::move(j));
    }
    out["meshes"] = std::move(meshes);
    return out;
}

inline Scene scene_from_json(const json& j) {
    try {
        Scene sc;
        const auto& meta = j.at("metadata");
        sc.basis = meta.at("basis").get<std::string>();
        if (sc.basis != "lisa" && sc.basis != "multipole") throw ValidationError("scene basis must be lisa or multipole");
        sc.n = meta.at("n").get<int>();
        sc.step = meta.at("step").get<int>();
        for (const auto& e : j.at("layout")) {
            const auto& a = e.at("anchor");
            sc.layout.push_back({e.at("label"), e.at("name").get<std::string>(), {a.at(0).get<double>(), a.at(1).get<double>()}});
        }
        for (const auto& e : j.at("meshes")) {
            DropletMesh m;
            m.label = e.at("label");
            m.name = e.at("name").get<std::string>();
            m.theta = e.at("theta").get<std::vector<double>>();
            m.phi = e.at("phi").get<std::vector<double>>();
            m.radius = e.at("radius").get<std::vector<double>>();
            m.phase = e.at("phase").get<std::vector<double>>();
            const std::size_t cells = m.theta.size() * m.phi.size();
            if (m.radius.size() != cells || m.phase.size() != cells) throw ValidationError("mesh '" + m.name + "' size does not match its grid");
            for (std::size_t k = 0; k < cells; ++k)
                if (m.radius[k] < 0.0 || m.phase[k] <= -std::numbers::pi || m.phase[k] > std::numbers::pi)
                    throw ValidationError("mesh '" + m.name + "' has a negative radius or a phase outside (-pi, pi]");
            sc.meshes.push_back(std::move(m));
        }
        return sc;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed scene: ") + e.what());
    }
}

// Largest difference of the sampled values r e^{i phase} between two scenes with
// the same droplets; infinity when the droplet sets or grids differ.
inline double scene_distance(const Scene& a, const Scene& b) {
    if (a.meshes.size() != b.meshes.size()) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (std::size_t i = 0; i < a.meshes.size(); ++i) {
        const auto& x = a.meshes[i];
        const auto& y = b.meshes[i];
        if (x.name != y.name || x.radius.size() != y.radius.size()) return std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < x.radius.size(); ++k)
            dev = std::max(dev, std::abs(std::polar(x.radius[k], x.phase[k]) - std::polar(y.radius[k], y.phase[k])));
    }
    return dev;
}

// Phase hue: red at 0, cyan at pi.
inline std::array<double, 3> phase_color(double phase) {
    double h = phase / (2.0 * std::numbers::pi);
    h -= std::floor(h);
    h *= 6.0;
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    switch (sector) {
        case 0: return {1.0, f, 0.0};
        case 1: return {1.0 - f, 1.0, 0.0};
        case 2: return {0.0, 1.0, f};
        case 3: return {0.0, 1.0 - f, 1.0};
        case 4: return {f, 0.0, 1.0};
        default: return {1.0, 0.0, 1.0 - f};
    }
}

// Wavefront-style ASCII triangle mesh: one object per droplet, vertices "v x y z r g b"
// placed at the droplet's layout anchor (scaled by spacing), 1-based faces "f a b c".
inline std::string scene_obj(const Scene& sc, double spacing = 0.0) {
    double rmax = 0.0;
    for (const auto& m : sc.meshes)
        for (double r : m.radius) rmax = std::max(rmax, r);
    if (spacing <= 0.0) spacing = rmax > 0.0 ? 2.5 * rmax : 1.0;
    std::map<std::string, Anchor> anchors;
    for (const auto& e : sc.layout) anchors[e.name] = e.anchor;
    std::ostringstream os;
    os.precision(9);
    os << "# droplet scene basis=" << sc.basis << " n=" << sc.n << " step=" << sc.step << "\n";
    std::size_t base = 1;
    for (const auto& m : sc.meshes) {
        const Anchor a = anchors.count(m.name) ? anchors[m.name] : Anchor{};
        const std::size_t nt = m.theta.size(), np = m.phi.size();
        os << "o " << m.name << "\n";
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t k = 0; k < np; ++k) {
                const double r = m.radius[i * np + k];
                const double th = m.theta[i], ph = m.phi[k];
                const auto c = phase_color(m.phase[i * np + k]);
                os << "v " << a.x * spacing + r * std::sin(th) * std::cos(ph) << ' '
                   << a.y * spacing + r * std::sin(th) * std::sin(ph) << ' ' << r * std::cos(th) << ' '
                   << c[0] << ' ' << c[1] << ' ' << c[2] << "\n";
            }
        for (std::size_t i = 0; i + 1 < nt; ++i)
            for (std::size_t k = 0; k < np; ++k) {
                const std::size_t k2 = (k + 1) % np;
                const std::size_t v00 = base + i * np + k, v01 = base + i * np + k2;
                const std::size_t v10 = base + (i + 1) * np + k, v11 = base + (i + 1) * np + k2;
                if (i > 0) os << "f " << v00 << ' ' << v10 << ' ' << v01 << "\n";
                if (i + 2 < nt) os << "f " << v01 << ' ' << v10 << ' ' << v11 << "\n";
            }
        base += nt * np;
    }
    return os.str();
}

}  // namespace drops
