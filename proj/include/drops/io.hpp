#pragma once

#include "dynamics.hpp"
#include "count_tables.hpp"
#include "multipole.hpp"
#include "tables_data.hpp"

#include <json.hpp>

namespace drops {

using json = nlohmann::ordered_json;

// Well-formed input that violates a schema or a physical precondition.
struct ValidationError : Error {
    using Error::Error;
};

inline json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline cplx complex_from_json(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ValidationError("complex entry must be a number or [re, im]");
}

// Row-major [[ [re, im], ... ], ...]
inline json operator_json(const Operator& a) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(complex_json(a(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Accepts a bare matrix or {"matrix": ...}; the dimension must be a power of two.
inline Operator operator_from_json(const json& j) {
    const json& m = j.is_object() ? j.at("matrix") : j;
    if (!m.is_array() || m.empty()) throw ValidationError("operator matrix must be a non-empty array of rows");
    const auto d = static_cast<Eigen::Index>(m.size());
    if ((d & (d - 1)) != 0) throw ValidationError("operator dimension must be a power of two");
    Operator a(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const json& row = m[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) throw ValidationError("operator matrix must be square");
        for (Eigen::Index c = 0; c < d; ++c) a(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return a;
}

// Labels

inline json label_json(const DropLabel& l) {
    json j;
    j["G"] = l.G;
    j["tau"] = l.tau ? json(l.tau->rows) : json(nullptr);
    return j;
}

inline DropLabel label_from_json(const json& j) {
    if (!j.is_object() || !j.contains("G") || !j["G"].is_array()) throw ValidationError("label needs an array field G");
    DropLabel l;
    l.G = j["G"].get<std::vector<int>>();
    if (!std::is_sorted(l.G.begin(), l.G.end()) || std::adjacent_find(l.G.begin(), l.G.end()) != l.G.end())
        throw ValidationError("label G must be strictly increasing");
    const bool has_tau = j.contains("tau") && !j["tau"].is_null();
    if (l.G.size() >= 3) {
        if (!has_tau) throw ValidationError("labels with three or more spins need tau");
        StandardTableau t;
        t.rows = j["tau"].get<std::vector<std::vector<int>>>();
        auto w = t.word();
        std::sort(w.begin(), w.end());
        if (w != l.G) throw ValidationError("tau entries must equal G");
        l.tau = t;
        try { l.tableau_index(); } catch (const Error&) { throw ValidationError("tau is not a standard tableau"); }
    } else if (has_tau) {
        throw ValidationError("labels with fewer than three spins carry no tau");
    }
    return l;
}

inline json block_json(const StateBlock& b) {
    json kappa = b.kappa2 < 0 ? json(nullptr) : json(b.kappa2 / 2.0);
    return json::array({kappa, b.j2 / 2.0});
}

inline StateBlock block_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("state block must be [kappa, j]");
    StateBlock b;
    b.kappa2 = j[0].is_null() ? -1 : twice(j[0].get<double>());
    b.j2 = twice(j[1].get<double>());
    return b;
}

inline json label_json(const MultipoleLabel& l) {
    json j;
    j["from"] = block_json(l.from);
    j["to"] = block_json(l.to);
    return j;
}

inline MultipoleLabel multipole_label_from_json(const json& j) {
    if (!j.is_object() || !j.contains("from") || !j.contains("to")) throw ValidationError("multipole label needs from and to");
    return {block_from_json(j["from"]), block_from_json(j["to"])};
}

// Spectrum JSON: {n, droplets: [{label, terms: [{j, m, re, im}]}]}. Terms with
// |c| <= drop_below are omitted; every droplet of the spectrum is listed.
template <class Label>
json spectrum_json(const Spectrum<Label>& s, double drop_below = 0.0) {
    json out;
    out["n"] = s.n;
    json drops = json::array();
    for (const auto& [l, terms] : s.droplets) {
        json d;
        d["label"] = label_json(l);
        json ts = json::array();
        for (const auto& [jm, c] : terms) {
            if (std::abs(c) <= drop_below) continue;
            json t;
            t["j"] = jm.first;
            t["m"] = jm.second;
            t["re"] = c.real();
            t["im"] = c.imag();
            ts.push_back(std::move(t));
        }
        d["terms"] = std::move(ts);
        drops.push_back(std::move(d));
    }
    out["droplets"] = std::move(drops);
    return out;
}

template <class Label, class LabelParser>
Spectrum<Label> spectrum_from_json(const json& j, LabelParser parse_label) {
    if (!j.is_object() || !j.contains("n") || !j.contains("droplets")) throw ValidationError("spectrum needs n and droplets");
    Spectrum<Label> s;
    s.n = j["n"].get<int>();
    if (s.n < 1 || s.n > 5) throw ValidationError("spectrum n must be in 1..5");
    for (const auto& d : j["droplets"]) {
        const Label l = parse_label(d.at("label"));
        auto& terms = s.droplets[l];
        for (const auto& t : d.at("terms")) {
            const int jj = t.at("j").get<int>(), m = t.at("m").get<int>();
            if (jj < 0 || std::abs(m) > jj) throw ValidationError("spectrum term needs |m| <= j");
            terms[{jj, m}] = cplx(t.at("re").get<double>(), t.at("im").get<double>());
        }
    }
    return s;
}

inline DropletSpectrum lisa_spectrum_from_json(const json& j) {
    return spectrum_from_json<DropLabel>(j, label_from_json);
}

inline Spectrum<MultipoleLabel> multipole_spectrum_from_json(const json& j) {
    return spectrum_from_json<MultipoleLabel>(j, multipole_label_from_json);
}

// Basis export: [{label, j, m, matrix}]
template <class Basis>
json basis_json(const Basis& b) {
    json out = json::array();
    for (const auto& t : b.tensors)
        for (int m = -t.j; m <= t.j; ++m) {
            json e;
            e["label"] = label_json(t.label);
            e["j"] = t.j;
            e["m"] = m;
            e["matrix"] = operator_json(t[m]);
            out.push_back(std::move(e));
        }
    return out;
}

// Pulse segments

inline PulseSegment segment_from_json(const json& j, int n) {
    if (!j.is_object()) throw ValidationError("segment must be an object");
    for (const auto& [k, v] : j.items())
        if (k != "kind" && k != "amplitude_hz" && k != "phase" && k != "phase_deg" && k != "duration_s" &&
            k != "couplings" && k != "a" && k != "b" && k != "couplings_during_pulse")
            throw ValidationError("unknown segment field '" + k + "'");
    PulseSegment s;
    const std::string kind = j.value("kind", "");
    if (kind == "pulse") s.kind = PulseSegment::Kind::pulse;
    else if (kind == "delay") s.kind = PulseSegment::Kind::delay;
    else throw ValidationError("segment kind must be 'pulse' or 'delay'");
    if (!j.contains("duration_s") || !j["duration_s"].is_number()) throw ValidationError("segment needs a numeric duration_s");
    s.duration_s = j["duration_s"].get<double>();
    if (!(s.duration_s >= 0.0) || !std::isfinite(s.duration_s)) throw ValidationError("duration_s must be finite and non-negative");
    if (s.kind == PulseSegment::Kind::pulse) {
        if (!j.contains("amplitude_hz") || !j["amplitude_hz"].is_number()) throw ValidationError("pulse needs a numeric amplitude_hz");
        s.amplitude_hz = j["amplitude_hz"].get<double>();
        if (!(s.amplitude_hz >= 0.0) || !std::isfinite(s.amplitude_hz)) throw ValidationError("amplitude_hz must be finite and non-negative");
        if (j.contains("phase_deg")) s.phase_deg = j["phase_deg"].get<double>();
        else if (j.contains("phase")) {
            try { s.phase_deg = parse_phase(j["phase"].get<std::string>()); } catch (const Error& e) { throw ValidationError(e.what()); }
        }
    }
    s.a = j.value("a", 0.0);
    s.b = j.value("b", 1.0);
    s.couplings_during_pulse = j.value("couplings_during_pulse", false);
    if (j.contains("couplings")) {
        for (const auto& c : j["couplings"]) {
            Coupling cp{c.at("k").get<int>(), c.at("l").get<int>(), c.at("J").get<double>()};
            if (!(1 <= cp.k && cp.k < cp.l && cp.l <= n)) throw ValidationError("coupling pair must satisfy 1 <= k < l <= n");
            s.couplings.push_back(cp);
        }
    }
    return s;
}

inline json segment_json(const PulseSegment& s) {
    json j;
    j["kind"] = s.kind == PulseSegment::Kind::pulse ? "pulse" : "delay";
    j["duration_s"] = s.duration_s;
    if (s.kind == PulseSegment::Kind::pulse) {
        j["amplitude_hz"] = s.amplitude_hz;
        j["phase_deg"] = s.phase_deg;
    }
    if (!s.couplings.empty()) {
        json cs = json::array();
        for (const auto& c : s.couplings) cs.push_back(json{{"k", c.k}, {"l", c.l}, {"J", c.J}});
        j["couplings"] = cs;
        j["a"] = s.a;
        j["b"] = s.b;
    }
    if (s.couplings_during_pulse) j["couplings_during_pulse"] = true;
    return j;
}

// Reference table data as shipped in data/tables.json.
inline json reference_tables_json() {
    json out;
    out["version"] = 1;
    auto rows = [](const auto& table) {
        json a = json::array();
        for (const auto& r : table) a.push_back(json::array({std::string(r.lhs), std::string(r.rhs)}));
        return a;
    };
    out["trilinear_to_cartesian"] = rows(tables::trilinear_to_cartesian);
    out["cartesian_to_trilinear"] = rows(tables::cartesian_to_trilinear);
    out["multipole_to_lisa"] = rows(tables::multipole_to_lisa);
    json dc = json::array();
    for (const auto& r : tables::droplet_counts)
        dc.push_back(json{{"n", r.n}, {"minimum", r.minimum}, {"multipole", r.multipole}, {"lisa", r.lisa}, {"maximum", r.maximum}});
    out["droplet_counts"] = dc;
    json rm = json::array();
    for (const auto& r : tables::rank_multiplicities) rm.push_back(json{{"n", r.n}, {"j", r.j}, {"n_j", r.n_j}, {"n_bar_j", r.n_bar_j}});
    out["rank_multiplicities"] = rm;
    json sr = json::array();
    for (const auto& r : tables::symmetry_ranks())
        sr.push_back(json{{"g", r.g}, {"lambda", r.lambda}, {"tableau_count", r.tableau_count}, {"ranks", r.ranks}});
    out["symmetry_ranks"] = sr;
    return out;
}

}  // namespace drops
