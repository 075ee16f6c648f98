#pragma once

#include "opexpr.hpp"
#include "scene.hpp"

#include <chrono>
#include <mutex>
#include <random>

namespace drops {

struct Session {
    std::string id;
    int n = 0;
    std::string basis = "lisa";
    GridSpec grid;
    Operator rho;
    int step = 0;
    json history = json::array();

    std::mutex mu;
    std::chrono::steady_clock::time_point last_used;
};

// In-memory sessions with idle-time eviction.
class SessionStore {
public:
    using clock = std::chrono::steady_clock;

    explicit SessionStore(std::chrono::milliseconds ttl = std::chrono::minutes(30)) : ttl_(ttl), rng_(std::random_device{}()) {}

    std::shared_ptr<Session> create() {
        auto s = std::make_shared<Session>();
        std::lock_guard<std::mutex> lock(mu_);
        sweep_locked(clock::now());
        do s->id = fresh_id(); while (sessions_.count(s->id));
        s->last_used = clock::now();
        sessions_[s->id] = s;
        return s;
    }

    std::shared_ptr<Session> find(const std::string& id) {
        std::lock_guard<std::mutex> lock(mu_);
        const auto now = clock::now();
        sweep_locked(now);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return nullptr;
        it->second->last_used = now;
        return it->second;
    }

    bool erase(const std::string& id) {
        std::lock_guard<std::mutex> lock(mu_);
        return sessions_.erase(id) > 0;
    }

    std::size_t size() {
        std::lock_guard<std::mutex> lock(mu_);
        sweep_locked(clock::now());
        return sessions_.size();
    }

private:
    std::chrono::milliseconds ttl_;
    std::mutex mu_;
    std::mt19937_64 rng_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;

    std::string fresh_id() {
        static const char* hex = "0123456789abcdef";
        std::string id;
        for (int w = 0; w < 2; ++w) {
            std::uint64_t v = rng_();
            for (int k = 0; k < 16; ++k, v >>= 4) id += hex[v & 15];
        }
        return id;
    }

    void sweep_locked(clock::time_point now) {
        for (auto it = sessions_.begin(); it != sessions_.end();) {
            if (now - it->second->last_used > ttl_) it = sessions_.erase(it);
            else ++it;
        }
    }
};

struct HttpError : Error {
    int status;
    std::optional<std::size_t> offset;
    HttpError(int st, const std::string& msg, std::optional<std::size_t> off = std::nullopt) : Error(msg), status(st), offset(off) {}
};

struct Response {
    int status = 200;
    json body;
};

// Density matrix from a reset request: named state, or an expression that must be
// Hermitian; traceless operators are read as deviations from Id/2^n, others are
// scaled to unit trace.
inline Operator state_from_request(const json& body, int n) {
    if (!body.is_object()) throw HttpError(422, "reset body must be an object");
    const bool has_state = body.contains("state"), has_expr = body.contains("expression");
    if (has_state == has_expr) throw HttpError(422, "give exactly one of state or expression");
    Operator a;
    if (has_state) {
        if (!body["state"].is_string()) throw HttpError(422, "state must be a string");
        const std::string name = body["state"].get<std::string>();
        const auto names = named_state_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) throw HttpError(422, "unknown named state '" + name + "'");
        a = named_state(name, n);
        if (spin_count(a) != n) throw HttpError(422, "state '" + name + "' does not have " + std::to_string(n) + " spins");
        return a;
    }
    if (!body["expression"].is_string()) throw HttpError(422, "expression must be a string");
    try {
        a = parse_operator(body["expression"].get<std::string>(), n);
    } catch (const ParseError& e) {
        throw HttpError(422, e.what(), e.offset);
    }
    if (!is_hermitian(a, 1e-10)) throw HttpError(422, "state expression is not Hermitian");
    const cplx tr = a.trace();
    const Eigen::Index d = a.rows();
    if (std::abs(tr) < 1e-12) return Operator::Identity(d, d) / static_cast<double>(d) + a;
    return a / tr.real();
}

class Service {
public:
    explicit Service(std::chrono::milliseconds ttl = std::chrono::minutes(30)) : store_(ttl) {}

    Response handle(const std::string& method, const std::string& path, const std::string& body) {
        try {
            return route(method, path, body);
        } catch (const HttpError& e) {
            return error(e.status, e.what(), e.offset);
        } catch (const ValidationError& e) {
            return error(422, e.what());
        } catch (const json::exception& e) {
            return error(422, e.what());
        } catch (const std::exception& e) {
            return error(500, e.what());
        }
    }

    SessionStore& store() { return store_; }

private:
    SessionStore store_;

    static Response error(int status, const std::string& msg, std::optional<std::size_t> offset = std::nullopt) {
        json e;
        e["status"] = status;
        e["message"] = msg;
        if (offset) e["offset"] = *offset;
        return {status, json{{"error", e}}};
    }

    static std::vector<std::string> split(const std::string& path) {
        std::vector<std::string> out;
        std::size_t p = 0;
        const std::string clean = path.substr(0, path.find('?'));
        while (p < clean.size()) {
            std::size_t q = clean.find('/', p);
            if (q == std::string::npos) q = clean.size();
            if (q > p) out.push_back(clean.substr(p, q - p));
            p = q + 1;
        }
        return out;
    }

    static json parse_body(const std::string& body) {
        if (body.empty()) return json::object();
        try {
            return json::parse(body);
        } catch (const json::parse_error& e) {
            throw HttpError(400, std::string("malformed JSON: ") + e.what(), e.byte > 0 ? std::optional<std::size_t>(e.byte - 1) : std::nullopt);
        }
    }

    static void require_method(const std::string& have, const char* want) {
        if (have != want) throw HttpError(405, "method " + have + " not allowed here");
    }

    Response route(const std::string& method, const std::string& path, const std::string& body) {
        const auto parts = split(path);
        if (parts.size() == 3 && parts[0] == "basis" && parts[2] == "labels") {
            require_method(method, "GET");
            return {200, labels(parts[1])};
        }
        if (!parts.empty() && parts[0] == "session") {
            if (parts.size() == 1) {
                require_method(method, "POST");
                return create(parse_body(body));
            }
            auto s = store_.find(parts[1]);
            if (!s) throw HttpError(404, "unknown session '" + parts[1] + "'");
            std::lock_guard<std::mutex> lock(s->mu);
            if (parts.size() == 2) {
                if (method == "DELETE") {
                    store_.erase(s->id);
                    return {200, json{{"id", s->id}, {"deleted", true}}};
                }
                require_method(method, "GET");
                return {200, info(*s)};
            }
            if (parts.size() == 3) {
                const std::string& op = parts[2];
                if (op == "scene") {
                    require_method(method, "GET");
                    return {200, scene(*s)};
                }
                if (op == "apply" || op == "rotate" || op == "reset") {
                    require_method(method, "POST");
                    const json b = parse_body(body);
                    if (op == "apply") apply(*s, b);
                    else if (op == "rotate") rotate(*s, b);
                    else reset(*s, b);
                    return {200, scene(*s)};
                }
            }
        }
        throw HttpError(404, "no route for " + path);
    }

    static json labels(const std::string& ntext) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(ntext, &used);
            if (used != ntext.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw HttpError(404, "basis size must be an integer");
        }
        if (n < 1 || n > 5) throw HttpError(422, "n must be in 1..5");
        json out;
        out["n"] = n;
        json lisa = json::array();
        const auto basis = lisa_basis(n);
        for (const auto& [l, ranks] : basis->droplet_index()) {
            json e;
            e["label"] = label_json(l);
            e["name"] = l.str();
            e["ranks"] = ranks;
            lisa.push_back(std::move(e));
        }
        out["lisa"] = std::move(lisa);
        if (n <= 3) {
            const auto mb = multipole_basis(n);
            json mp = json::array();
            for (const auto& l : mb->labels()) {
                json e;
                e["label"] = label_json(l);
                e["name"] = mb->name(l);
                std::vector<int> ranks;
                for (const auto& t : mb->tensors)
                    if (t.label == l) ranks.push_back(t.j);
                e["ranks"] = ranks;
                mp.push_back(std::move(e));
            }
            out["multipole"] = std::move(mp);
        }
        return out;
    }

    static json info(const Session& s) {
        json j;
        j["id"] = s.id;
        j["n"] = s.n;
        j["basis"] = s.basis;
        j["step"] = s.step;
        j["history"] = s.history;
        return j;
    }

    static json scene(const Session& s) {
        if (s.basis == "multipole") {
            const auto mb = multipole_basis(s.n);
            return scene_json(make_scene(decompose(s.rho, *mb), *mb, s.step, s.grid));
        }
        return scene_json(make_scene(decompose(s.rho, *lisa_basis(s.n)), s.step, s.grid));
    }

    Response create(const json& b) {
        if (!b.is_object()) throw HttpError(422, "session body must be an object");
        if (!b.contains("n") || !b["n"].is_number_integer()) throw HttpError(422, "n must be an integer");
        const int n = b["n"].get<int>();
        const std::string basis = b.value("basis", "lisa");
        if (basis != "lisa" && basis != "multipole") throw HttpError(422, "basis must be lisa or multipole");
        if (n < 1 || n > (basis == "multipole" ? 3 : 5)) throw HttpError(422, "n out of range for the " + basis + " basis");
        GridSpec grid;
        if (b.contains("grid")) {
            grid.n_theta = b["grid"].value("n_theta", grid.n_theta);
            grid.n_phi = b["grid"].value("n_phi", grid.n_phi);
            if (grid.n_theta < 2 || grid.n_phi < 3 || grid.n_theta > 512 || grid.n_phi > 1024) throw HttpError(422, "grid size out of range");
        }
        json init = json::object();
        if (b.contains("state")) init["state"] = b["state"];
        if (b.contains("expression")) init["expression"] = b["expression"];
        if (init.empty()) init["expression"] = "Fz";
        const Operator rho = state_from_request(init, n);

        auto s = store_.create();
        std::lock_guard<std::mutex> lock(s->mu);
        s->n = n;
        s->basis = basis;
        s->grid = grid;
        s->rho = rho;
        s->history.push_back(json{{"op", "reset"}, {"body", init}});
        json out;
        out["id"] = s->id;
        out["scene"] = scene(*s);
        return {201, out};
    }

    static void commit(Session& s, Operator rho, const char* op, const json& body) {
        s.rho = std::move(rho);
        ++s.step;
        s.history.push_back(json{{"op", op}, {"body", body}});
    }

    static void apply(Session& s, const json& b) {
        const PulseSegment seg = segment_from_json(b, s.n);
        const Operator u = exp_hermitian(segment_hamiltonian(seg, s.n), seg.duration_s);
        commit(s, u * s.rho * u.adjoint(), "apply", segment_json(seg));
    }

    static void rotate(Session& s, const json& b) {
        if (!b.is_object() || !b.contains("axis") || !b.contains("angle") || !b["angle"].is_number())
            throw HttpError(422, "rotate needs axis and a numeric angle (radians)");
        Eigen::Vector3d axis;
        if (b["axis"].is_string()) {
            const std::string a = b["axis"].get<std::string>();
            if (a.size() != 1 || (a[0] != 'x' && a[0] != 'y' && a[0] != 'z')) throw HttpError(422, "axis must be x, y, z or a 3-vector");
            axis = unit_vector(a[0]);
        } else if (b["axis"].is_array() && b["axis"].size() == 3) {
            for (int k = 0; k < 3; ++k) axis(k) = b["axis"][static_cast<std::size_t>(k)].get<double>();
            if (!(axis.norm() > 0.0) || !axis.allFinite()) throw HttpError(422, "axis vector must be finite and nonzero");
        } else {
            throw HttpError(422, "axis must be x, y, z or a 3-vector");
        }
        const double angle = b["angle"].get<double>();
        if (!std::isfinite(angle)) throw HttpError(422, "angle must be finite");
        const Operator u = rotation_operator(axis, angle, s.n);
        commit(s, u * s.rho * u.adjoint(), "rotate", b);
    }

    static void reset(Session& s, const json& b) {
        commit(s, state_from_request(b, s.n), "reset", b);
    }
};

}  // namespace drops
