#include <drops/opexpr.hpp>
#include <drops/scene.hpp>
#include <drops/service.hpp>
#include <drops/verify.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace drops;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_tolerance = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    const auto parent = std::filesystem::path(out_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(what + ": malformed JSON at byte " + std::to_string(e.byte ? e.byte - 1 : 0));
    }
}

// A dense JSON matrix, a JSON string holding an expression, or a bare expression.
Operator load_operator(const std::string& expr, const std::string& input, int& n) {
    if (!expr.empty()) {
        if (n < 1) throw ValidationError("--expr needs --n");
        return parse_operator(expr, n);
    }
    const std::string text = read_file(input);
    json j;
    bool is_json = true;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        is_json = false;
    }
    if (!is_json || j.is_string()) {
        if (n < 1) throw ValidationError("expression input needs --n");
        return parse_operator(is_json ? j.get<std::string>() : text, n);
    }
    if (j.is_object() && j.contains("expression")) {
        const int jn = j.value("n", n);
        if (jn < 1) throw ValidationError("expression input needs n");
        n = jn;
        return parse_operator(j["expression"].get<std::string>(), n);
    }
    const Operator a = operator_from_json(j);
    const int dn = spin_count(a);
    if (n > 0 && n != dn) throw ValidationError("matrix dimension does not match --n");
    n = dn;
    return a;
}

json spectrum_for(const Operator& a, int n, const std::string& basis, double tol) {
    if (basis == "multipole") {
        if (n > 3) throw ValidationError("multipole basis supports n <= 3");
        return spectrum_json(decompose(a, *multipole_basis(n)), tol);
    }
    if (basis != "lisa") throw ValidationError("basis must be lisa or multipole");
    return spectrum_json(decompose(a, *lisa_basis(n)), tol);
}

GridSpec parse_grid(const std::string& g) {
    GridSpec s;
    if (g.empty()) return s;
    const auto x = g.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument("grid");
        s.n_theta = std::stoi(g.substr(0, x));
        s.n_phi = std::stoi(g.substr(x + 1));
    } catch (const std::logic_error&) {
        throw ValidationError("grid must look like 64x128");
    }
    if (s.n_theta < 2 || s.n_phi < 3) throw ValidationError("grid too small");
    return s;
}

Scene scene_for(const json& spectrum, const std::string& basis, int step, const GridSpec& grid) {
    if (basis == "multipole") {
        const auto s = multipole_spectrum_from_json(spectrum);
        if (s.n > 3) throw ValidationError("multipole basis supports n <= 3");
        return make_scene(s, *multipole_basis(s.n), step, grid);
    }
    return make_scene(lisa_spectrum_from_json(spectrum), step, grid);
}

json counts_json(int n) {
    json out;
    out["n"] = n;
    const auto b = droplet_bounds(n);
    out["minimum"] = b.minimum;
    out["lisa"] = b.lisa;
    out["maximum"] = b.maximum;
    out["multipole"] = multipole_droplet_count(n);
    json rows = json::array();
    for (const auto& r : multiplicity_table(n)) rows.push_back(json{{"j", r.j}, {"n_j", r.n_j}, {"n_bar_j", r.n_bar_j}});
    out["multiplicities"] = rows;
    if (n <= 6) {
        json sym = json::array();
        for (const auto& r : symmetry_rank_table(n))
            sym.push_back(json{{"lambda", r.lambda}, {"tableau_count", r.tableau_count}, {"ranks", r.ranks}});
        out["symmetry_types"] = sym;
    }
    return out;
}

std::string counts_text(const json& c) {
    std::ostringstream os;
    os << "n " << c["n"] << "\n";
    os << "minimum " << c["minimum"] << "\nlisa " << c["lisa"] << "\nmaximum " << c["maximum"] << "\nmultipole " << c["multipole"] << "\n";
    os << "j n_j n_bar_j\n";
    for (const auto& r : c["multiplicities"]) os << r["j"] << ' ' << r["n_j"] << ' ' << r["n_bar_j"] << "\n";
    if (c.contains("symmetry_types")) {
        os << "lambda #tau ranks\n";
        for (const auto& r : c["symmetry_types"]) os << r["lambda"].dump() << ' ' << r["tableau_count"] << ' ' << r["ranks"].dump() << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Droplet representations of spin operators"};
    app.require_subcommand(1);

    int n = 0;
    std::string basis = "lisa", out_path, expr, input, grid_text, format = "json", suite = "all", sequence, scenes_dir;
    double tol = 1e-12;
    int step = 0, samples = 50;
    bool as_json = false;

    auto* build = app.add_subcommand("build-basis", "Export the basis as {label, j, m, matrix} entries");
    build->add_option("--n", n, "Number of spins")->required();
    build->add_option("--basis", basis, "lisa or multipole");
    build->add_option("--out", out_path, "Output file (default stdout)");

    auto* map = app.add_subcommand("map", "Map an operator to its droplet spectrum");
    map->add_option("--expr", expr, "Operator expression, e.g. \"2*I1z*I2z\" or \"GHZ\"");
    map->add_option("--input", input, "JSON matrix or expression file");
    map->add_option("--n", n, "Number of spins");
    map->add_option("--basis", basis, "lisa or multipole");
    map->add_option("--tol", tol, "Omit terms with |c| below this");
    map->add_option("--out", out_path, "Output file (default stdout)");

    auto* sim = app.add_subcommand("simulate", "Run a pulse sequence and export the trace");
    sim->add_option("--sequence", sequence, "Sequence JSON (default: the triple-quantum example)");
    sim->add_option("--scenes", scenes_dir, "Directory for per-step scene files");
    sim->add_option("--grid", grid_text, "Scene grid, e.g. 64x128");
    sim->add_option("--tol", tol, "Omit terms with |c| below this");
    sim->add_option("--out", out_path, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Run the property and table suites");
    ver->add_option("--suite", suite, "Suite name or all");
    ver->add_option("--n", n, "Largest spin count for the basis suites (1..5)");
    ver->add_option("--samples", samples, "Random samples per randomized check");
    ver->add_flag("--json", as_json, "Print the report as JSON");

    auto* mesh = app.add_subcommand("export-mesh", "Sample droplets into a scene or a triangle mesh");
    mesh->add_option("--input", input, "Spectrum JSON");
    mesh->add_option("--expr", expr, "Operator expression (instead of --input)");
    mesh->add_option("--n", n, "Number of spins for --expr");
    mesh->add_option("--basis", basis, "lisa or multipole");
    mesh->add_option("--format", format, "json or obj");
    mesh->add_option("--grid", grid_text, "Grid, e.g. 64x128");
    mesh->add_option("--step", step, "Step index stored in the metadata");
    mesh->add_option("--out", out_path, "Output file (default stdout)");

    auto* counts = app.add_subcommand("counts", "Droplet counts and rank multiplicities");
    counts->add_option("--n", n, "Number of spins (1..8)")->required();
    counts->add_flag("--json", as_json, "Print JSON");

    auto* tables_cmd = app.add_subcommand("export-tables", "Write the reference table fixture");
    tables_cmd->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_validation;
    }

    try {
        if (*build) {
            if (basis == "multipole") {
                if (n < 1 || n > 3) throw ValidationError("multipole basis supports n in 1..3");
                emit(basis_json(*multipole_basis(n)).dump(), out_path);
            } else if (basis == "lisa") {
                if (n < 1 || n > 5) throw ValidationError("n must be in 1..5");
                emit(basis_json(*lisa_basis(n)).dump(), out_path);
            } else {
                throw ValidationError("basis must be lisa or multipole");
            }
            return 0;
        }
        if (*map) {
            if (expr.empty() == input.empty()) throw ValidationError("give exactly one of --expr or --input");
            const Operator a = load_operator(expr, input, n);
            emit(spectrum_for(a, n, basis, tol).dump(2), out_path);
            return 0;
        }
        if (*sim) {
            json seq;
            if (sequence.empty()) {
                seq["n"] = 3;
                seq["initial"] = "I1z + I2z + I3z";
                json segs = json::array();
                for (const auto& s : triple_quantum_sequence()) segs.push_back(segment_json(s));
                seq["segments"] = segs;
            } else {
                seq = parse_json(read_file(sequence), sequence);
            }
            if (!seq.is_object() || !seq.contains("n") || !seq["n"].is_number_integer() || !seq.contains("segments") ||
                !seq["segments"].is_array())
                throw ValidationError("sequence needs integer n and a segments array");
            const int sn = seq["n"].get<int>();
            if (sn < 1 || sn > 5) throw ValidationError("sequence n must be in 1..5");
            // a string is used as written; an object follows the session reset rule
            const json init = seq.contains("initial") ? seq["initial"] : json("Fz");
            Operator rho0;
            if (init.is_string()) {
                rho0 = parse_operator(init.get<std::string>(), sn);
            } else {
                try {
                    rho0 = state_from_request(init, sn);
                } catch (const HttpError& e) {
                    throw ValidationError(e.what());
                }
            }
            std::vector<PulseSegment> segs;
            for (const auto& s : seq["segments"]) segs.push_back(segment_from_json(s, sn));
            const SequenceTrace tr = run_sequence(rho0, segs);
            const auto b = lisa_basis(sn);
            json out;
            out["n"] = sn;
            out["initial"] = init;
            json sj = json::array();
            for (const auto& s : segs) sj.push_back(segment_json(s));
            out["segments"] = sj;
            out["total_time_s"] = tr.total_time;
            json states = json::array();
            for (std::size_t k = 0; k < tr.states.size(); ++k)
                states.push_back(json{{"step", k}, {"spectrum", spectrum_json(decompose(tr.states[k], *b), tol)}});
            out["states"] = states;
            json props = json::array();
            for (const auto& u : tr.propagators) props.push_back(spectrum_json(decompose(u, *b), tol));
            out["propagators"] = props;
            out["effective_propagator"] = spectrum_json(decompose(tr.effective_propagator, *b), tol);
            out["effective_hamiltonian"] = spectrum_json(decompose(tr.effective_hamiltonian, *b), tol);
            if (!scenes_dir.empty()) {
                std::filesystem::create_directories(scenes_dir);
                const GridSpec grid = parse_grid(grid_text);
                for (std::size_t k = 0; k < tr.states.size(); ++k) {
                    const Scene sc = make_scene(decompose(tr.states[k], *b), static_cast<int>(k), grid);
                    emit(scene_json(sc).dump(), (std::filesystem::path(scenes_dir) / ("scene_" + std::to_string(k) + ".json")).string());
                }
            }
            emit(out.dump(2), out_path);
            return 0;
        }
        if (*ver) {
            VerifyOptions opt;
            opt.max_n = n > 0 ? n : 3;
            opt.samples = samples;
            if (opt.max_n > 5) throw ValidationError("--n must be in 1..5");
            bool found = false, ok = true;
            json report = json::array();
            for (const auto& s : verify_suites()) {
                if (suite != "all" && suite != s.name) continue;
                found = true;
                for (const auto& c : s.run(opt)) {
                    ok = ok && c.pass;
                    const char* tag = !c.pass ? "FAIL" : (c.note ? "NOTE" : "PASS");
                    if (as_json) {
                        report.push_back(json{{"suite", s.name}, {"check", c.name}, {"status", tag}, {"value", c.value}, {"tolerance", c.tol}, {"detail", c.detail}});
                    } else {
                        std::cout << tag << "  " << s.name << ": " << c.name << "  (" << c.value << " <= " << c.tol << ")";
                        if (!c.detail.empty()) std::cout << "  " << c.detail;
                        std::cout << "\n";
                    }
                }
            }
            if (!found) throw ValidationError("unknown suite '" + suite + "'");
            if (as_json) std::cout << report.dump(2) << "\n";
            return ok ? 0 : exit_tolerance;
        }
        if (*mesh) {
            if (expr.empty() == input.empty()) throw ValidationError("give exactly one of --expr or --input");
            if (format != "json" && format != "obj") throw ValidationError("format must be json or obj");
            const GridSpec grid = parse_grid(grid_text);
            json spec;
            if (!expr.empty()) {
                const Operator a = load_operator(expr, "", n);
                spec = spectrum_for(a, n, basis, 0.0);
            } else {
                spec = parse_json(read_file(input), input);
            }
            const Scene sc = scene_for(spec, basis, step, grid);
            emit(format == "json" ? scene_json(sc).dump() : scene_obj(sc), out_path);
            return 0;
        }
        if (*counts) {
            if (n < 1 || n > 8) throw ValidationError("n must be in 1..8");
            const json c = counts_json(n);
            std::cout << (as_json ? c.dump(2) + "\n" : counts_text(c));
            return 0;
        }
        if (*tables_cmd) {
            emit(reference_tables_json().dump(2), out_path);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
