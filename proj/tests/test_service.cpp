#include <drops/http.hpp>
#include <drops/opexpr.hpp>
#include <drops/scene.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <thread>

using namespace drops;

namespace {

constexpr double pi = std::numbers::pi;

json read_json(const std::string& rel) {
    std::ifstream in(std::string(DROPS_SOURCE_DIR) + "/" + rel);
    if (!in) throw std::runtime_error("missing " + rel);
    return json::parse(in);
}

Response call(Service& svc, const std::string& method, const std::string& path, const json& body = json::object()) {
    return svc.handle(method, path, body.dump());
}

std::string create_session(Service& svc, const json& body) {
    const Response r = call(svc, "POST", "/session", body);
    EXPECT_EQ(r.status, 201) << r.body.dump();
    return r.body.at("id").get<std::string>();
}

json segments_json(const std::vector<PulseSegment>& segs) {
    json a = json::array();
    for (const auto& s : segs) a.push_back(segment_json(s));
    return a;
}

const json* mesh_named(const json& scene, const std::string& name) {
    for (const auto& m : scene["meshes"])
        if (m["name"] == name) return &m;
    return nullptr;
}

}  // namespace

// io

TEST(Io, SpectrumRoundTrip) {
    const auto s = decompose(parse_operator("I1z + 2 I1x I2y I3z + GHZ", 3), *lisa_basis(3));
    const json j = spectrum_json(s);
    const auto back = lisa_spectrum_from_json(json::parse(j.dump()));
    EXPECT_EQ(spectrum_json(back).dump(), j.dump());
    const auto ms = decompose(named_state("W"), *multipole_basis(3));
    const json mj = spectrum_json(ms);
    EXPECT_EQ(spectrum_json(multipole_spectrum_from_json(json::parse(mj.dump()))).dump(), mj.dump());
}

TEST(Io, SpectrumValidation) {
    EXPECT_THROW(lisa_spectrum_from_json(json{{"n", 9}, {"droplets", json::array()}}), ValidationError);
    const json bad_m = json::parse(R"({"n":1,"droplets":[{"label":{"G":[1],"tau":null},"terms":[{"j":1,"m":2,"re":1,"im":0}]}]})");
    EXPECT_THROW(lisa_spectrum_from_json(bad_m), ValidationError);
    const json no_tau = json::parse(R"({"n":3,"droplets":[{"label":{"G":[1,2,3],"tau":null},"terms":[]}]})");
    EXPECT_THROW(lisa_spectrum_from_json(no_tau), ValidationError);
    const json bad_tau = json::parse(R"({"n":3,"droplets":[{"label":{"G":[1,2,3],"tau":[[2,1,3]]},"terms":[]}]})");
    EXPECT_THROW(lisa_spectrum_from_json(bad_tau), ValidationError);
}

TEST(Io, OperatorRoundTrip) {
    const Operator a = parse_operator("I1x + i I2y", 2);
    const Operator back = operator_from_json(json::parse(operator_json(a).dump()));
    EXPECT_LT(max_abs(back - a), 1e-15);
    EXPECT_THROW(operator_from_json(json::parse("[[1,2,3]]")), ValidationError);
    EXPECT_THROW(operator_from_json(json::parse("[[1,0,0],[0,1,0],[0,0,1]]")), ValidationError);
}

TEST(Io, SegmentRoundTripAndValidation) {
    for (const auto& s : triple_quantum_sequence()) {
        const PulseSegment back = segment_from_json(segment_json(s), 3);
        EXPECT_EQ(segment_json(back).dump(), segment_json(s).dump());
    }
    EXPECT_NEAR(segment_from_json(json::parse(R"({"kind":"pulse","amplitude_hz":1,"phase":"-y","duration_s":1})"), 1).phase_deg, 270.0, 0.0);
    EXPECT_THROW(segment_from_json(json::parse(R"({"kind":"pulse","duration_s":1})"), 1), ValidationError);
    EXPECT_THROW(segment_from_json(json::parse(R"({"kind":"delay","duration_s":-1})"), 1), ValidationError);
    EXPECT_THROW(segment_from_json(json::parse(R"({"kind":"delay","duration_s":1,"speed":2})"), 1), ValidationError);
    EXPECT_THROW(segment_from_json(json::parse(R"({"kind":"delay","duration_s":1,"couplings":[{"k":1,"l":4,"J":1}]})"), 3),
                 ValidationError);
    EXPECT_THROW(segment_from_json(json::parse(R"({"kind":"warp","duration_s":1})"), 1), ValidationError);
}

TEST(Io, TablesFixtureMatchesReferenceAndComputedValues) {
    const json fixture = read_json("data/tables.json");
    EXPECT_EQ(fixture.dump(), reference_tables_json().dump());
    for (const auto& r : fixture["droplet_counts"]) {
        const int n = r["n"].get<int>();
        const auto b = droplet_bounds(n);
        EXPECT_EQ(b.minimum, r["minimum"].get<std::int64_t>()) << n;
        EXPECT_EQ(b.lisa, r["lisa"].get<std::int64_t>()) << n;
        EXPECT_EQ(b.maximum, r["maximum"].get<std::int64_t>()) << n;
        EXPECT_EQ(multipole_droplet_count(n), r["multipole"].get<std::int64_t>()) << n;
    }
    for (const auto& r : fixture["symmetry_ranks"]) {
        const int g = r["g"].get<int>();
        if (g > 4) continue;
        const auto rows = symmetry_rank_table(g);
        const auto lambda = r["lambda"].get<std::vector<int>>();
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const SymmetryRankRow& x) { return x.lambda == lambda; });
        ASSERT_NE(it, rows.end());
        EXPECT_EQ(it->ranks, r["ranks"].get<std::vector<int>>());
    }
}

// scene

TEST(Scene, IdentityOnlyRendersOneDropletAtCentroid) {
    const Scene sc = make_scene(decompose(identity(3), *lisa_basis(3)), 0, {8, 16});
    ASSERT_EQ(sc.meshes.size(), 1u);
    EXPECT_EQ(sc.meshes[0].name, "Id");
    const auto it = std::find_if(sc.layout.begin(), sc.layout.end(), [](const LayoutEntry& e) { return e.name == "Id"; });
    ASSERT_NE(it, sc.layout.end());
    EXPECT_NEAR(it->anchor.x, 0.0, 1e-12);
    EXPECT_NEAR(it->anchor.y, std::sqrt(3.0) / 3.0, 1e-3);
    const auto [mn, mx] = std::minmax_element(sc.meshes[0].radius.begin(), sc.meshes[0].radius.end());
    EXPECT_NEAR(*mx - *mn, 0.0, 1e-14);
}

TEST(Scene, LinearZDropletPointsUpWithZeroPhase) {
    const json fixture = read_json("tests/fixtures/scene_I1z.json");
    const Scene sc = scene_from_json(fixture);
    ASSERT_EQ(sc.meshes.size(), 1u);
    const auto& m = sc.meshes[0];
    const auto best = std::max_element(m.radius.begin(), m.radius.end()) - m.radius.begin();
    const std::size_t nphi = m.phi.size();
    const double theta = m.theta[static_cast<std::size_t>(best) / nphi];
    EXPECT_LE(theta, m.theta[1] + 1e-12);
    EXPECT_EQ(m.phase[static_cast<std::size_t>(best)], 0.0);
    const auto rgb = phase_color(m.phase[static_cast<std::size_t>(best)]);
    EXPECT_GT(rgb[0], rgb[1]);
    EXPECT_GT(rgb[0], rgb[2]);
}

TEST(Scene, FixtureMatchesFreshScene) {
    const json fixture = read_json("tests/fixtures/scene_I1z.json");
    const Scene sc = make_scene(decompose(parse_operator("I1z", 1), *lisa_basis(1)), 0, {16, 32});
    EXPECT_EQ(scene_json(sc).dump(), fixture.dump());
}

TEST(Scene, HermitianStatesUseTwoHues) {
    const Scene sc = make_scene(decompose(named_state("partial-entangled-example"), *lisa_basis(2)), 0, {16, 32});
    for (const auto& m : sc.meshes)
        for (std::size_t k = 0; k < m.phase.size(); ++k)
            if (m.radius[k] > 1e-9) EXPECT_TRUE(m.phase[k] == 0.0 || m.phase[k] == pi) << m.name << " " << m.phase[k];
}

TEST(Scene, SerializationRoundTripIsByteExact) {
    const Scene sc = make_scene(decompose(parse_operator("I1x + 2 I1y I2z + 0.3 I2x", 2), *lisa_basis(2)), 4, {12, 20});
    const std::string first = scene_json(sc).dump();
    const std::string second = scene_json(scene_from_json(json::parse(first))).dump();
    EXPECT_EQ(first, second);
}

TEST(Scene, RejectsMalformedScenes) {
    json j = scene_json(make_scene(decompose(parse_operator("I1z", 1), *lisa_basis(1)), 0, {4, 6}));
    json bad = j;
    bad["meshes"][0]["radius"].erase(0);
    EXPECT_THROW(scene_from_json(bad), ValidationError);
    bad = j;
    bad["meshes"][0]["radius"][0] = -1.0;
    EXPECT_THROW(scene_from_json(bad), ValidationError);
    bad = j;
    bad["meshes"][0]["phase"][0] = -pi;
    EXPECT_THROW(scene_from_json(bad), ValidationError);
}

TEST(Scene, MultipoleLayoutAndObjExport) {
    const auto mb = multipole_basis(3);
    const Scene sc = make_scene(decompose(named_state("W"), *mb), *mb, 0, {6, 8});
    EXPECT_EQ(sc.basis, "multipole");
    EXPECT_EQ(sc.layout.size(), 9u);
    EXPECT_EQ(sc.meshes.size(), 1u);
    const std::string obj = scene_obj(sc);
    EXPECT_NE(obj.find("\no "), std::string::npos);
    EXPECT_NE(obj.find("\nv "), std::string::npos);
    EXPECT_NE(obj.find("\nf "), std::string::npos);
}

// service

TEST(Service, LabelsEndpoint) {
    Service svc;
    const Response r = call(svc, "GET", "/basis/3/labels");
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(r.body["lisa"].size(), 11u);
    EXPECT_EQ(r.body["multipole"].size(), 9u);
    EXPECT_EQ(call(svc, "GET", "/basis/4/labels").body["lisa"].size(), 36u);
    EXPECT_FALSE(call(svc, "GET", "/basis/4/labels").body.contains("multipole"));
    EXPECT_EQ(call(svc, "GET", "/basis/9/labels").status, 422);
    EXPECT_EQ(call(svc, "GET", "/basis/x/labels").status, 404);
    EXPECT_EQ(call(svc, "POST", "/basis/3/labels").status, 405);
}

TEST(Service, ExampleSequenceCreatesTripleQuantumContent) {
    Service svc;
    const std::string id = create_session(svc, {{"n", 3}, {"grid", {{"n_theta", 16}, {"n_phi", 32}}}});
    Response r;
    for (const auto& seg : segments_json(triple_quantum_sequence())) {
        r = call(svc, "POST", "/session/" + id + "/apply", seg);
        ASSERT_EQ(r.status, 200) << r.body.dump();
    }
    EXPECT_EQ(r.body["metadata"]["step"], 3);
    ASSERT_NE(mesh_named(r.body, "{1,2,3}(t1)"), nullptr);
    const auto sess = svc.store().find(id);
    const auto s = decompose(sess->rho, *lisa_basis(3));
    EXPECT_NEAR(std::abs(s.coefficient(make_label({1, 2, 3}, 1), 3, 3)), 1.5, 0.01);
    EXPECT_NEAR(std::abs(s.coefficient(make_label({1, 2, 3}, 1), 3, -3)), 1.5, 0.01);
    const Response info = call(svc, "GET", "/session/" + id);
    EXPECT_EQ(info.body["history"].size(), 4u);
}

TEST(Service, ReplayMatchesLibrarySimulationByteForByte) {
    Service svc;
    const json grid = {{"n_theta", 16}, {"n_phi", 32}};
    const std::string id = create_session(svc, {{"n", 3}, {"expression", "Fz"}, {"grid", grid}});
    for (const auto& seg : segments_json(triple_quantum_sequence())) call(svc, "POST", "/session/" + id + "/apply", seg);
    const std::string served = call(svc, "GET", "/session/" + id + "/scene").body.dump();

    const Operator rho0 = state_from_request(json{{"expression", "Fz"}}, 3);
    const auto tr = run_sequence(rho0, triple_quantum_sequence());
    const std::string simulated = scene_json(make_scene(decompose(tr.states.back(), *lisa_basis(3)), 3, {16, 32})).dump();
    EXPECT_EQ(served, simulated);
}

TEST(Service, FullRotationLeavesSceneUnchanged) {
    Service svc;
    const json grid = {{"n_theta", 12}, {"n_phi", 24}};
    const std::string id = create_session(svc, {{"n", 2}, {"expression", "I1x + 2 I1y I2z"}, {"grid", grid}});
    const Scene before = scene_from_json(call(svc, "GET", "/session/" + id + "/scene").body);
    const Response r = call(svc, "POST", "/session/" + id + "/rotate", {{"axis", "z"}, {"angle", 2 * pi}});
    ASSERT_EQ(r.status, 200);
    EXPECT_LT(scene_distance(before, scene_from_json(r.body)), 1e-10);
}

TEST(Service, GhzInvariantUnderThirdTurn) {
    Service svc;
    const std::string id = create_session(svc, {{"n", 3}, {"state", "GHZ"}, {"grid", {{"n_theta", 12}, {"n_phi", 24}}}});
    const Scene before = scene_from_json(call(svc, "GET", "/session/" + id + "/scene").body);
    const Response r = call(svc, "POST", "/session/" + id + "/rotate", {{"axis", "z"}, {"angle", 2 * pi / 3}});
    ASSERT_EQ(r.status, 200);
    EXPECT_LT(scene_distance(before, scene_from_json(r.body)), 1e-10);
}

TEST(Service, ResetRules) {
    Service svc;
    const std::string id = create_session(svc, {{"n", 2}});
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"state", "phi+"}}).status, 200);
    EXPECT_LT(max_abs(svc.store().find(id)->rho - named_state("phi+")), 1e-15);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"expression", "I1z"}}).status, 200);
    EXPECT_LT(max_abs(svc.store().find(id)->rho - (identity(2) / 4.0 + parse_operator("I1z", 2))), 1e-15);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"expression", "2 Id"}}).status, 200);
    EXPECT_LT(max_abs(svc.store().find(id)->rho - identity(2) / 4.0), 1e-15);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"expression", "i I1z"}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"state", "GHZ"}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/reset", {{"state", "phi+"}, {"expression", "I1z"}}).status, 422);
}

TEST(Service, ErrorStatuses) {
    Service svc;
    const std::string id = create_session(svc, {{"n", 3}});
    const Response bad_sym = call(svc, "POST", "/session/" + id + "/reset", {{"expression", "I1z + I9q"}});
    EXPECT_EQ(bad_sym.status, 422);
    EXPECT_EQ(bad_sym.body["error"]["offset"], 6);
    EXPECT_EQ(call(svc, "GET", "/session/feedface/scene").status, 404);
    EXPECT_EQ(call(svc, "GET", "/nowhere").status, 404);
    EXPECT_EQ(svc.handle("POST", "/session/" + id + "/apply", "{\"kind\":").status, 400);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/apply", {{"kind", "pulse"}, {"duration_s", 1}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/rotate", {{"axis", "w"}, {"angle", 1}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session/" + id + "/rotate", {{"axis", {0, 0, 0}}, {"angle", 1}}).status, 422);
    EXPECT_EQ(call(svc, "GET", "/session/" + id + "/apply").status, 405);
    EXPECT_EQ(call(svc, "POST", "/session", {{"n", 4}, {"basis", "multipole"}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session", {{"n", "3"}}).status, 422);
    EXPECT_EQ(call(svc, "POST", "/session", {{"n", 2}, {"basis", "polar"}}).status, 422);
    EXPECT_EQ(call(svc, "DELETE", "/session/" + id).status, 200);
    EXPECT_EQ(call(svc, "GET", "/session/" + id).status, 404);
}

TEST(Service, SessionsAreIndependent) {
    Service svc;
    const std::string a = create_session(svc, {{"n", 1}, {"grid", {{"n_theta", 4}, {"n_phi", 6}}}});
    const std::string b = create_session(svc, {{"n", 1}, {"grid", {{"n_theta", 4}, {"n_phi", 6}}}});
    EXPECT_NE(a, b);
    const std::string before = call(svc, "GET", "/session/" + b + "/scene").body.dump();
    call(svc, "POST", "/session/" + a + "/rotate", {{"axis", "x"}, {"angle", 1.0}});
    EXPECT_EQ(call(svc, "GET", "/session/" + b + "/scene").body.dump(), before);
}

TEST(Service, ZeroDurationPulseIsNoOp) {
    Service svc;
    const std::string id = create_session(svc, {{"n", 2}, {"grid", {{"n_theta", 6}, {"n_phi", 8}}}});
    const json before = call(svc, "GET", "/session/" + id + "/scene").body;
    const json after = call(svc, "POST", "/session/" + id + "/apply", {{"kind", "pulse"}, {"amplitude_hz", 1e3}, {"duration_s", 0.0}}).body;
    EXPECT_LT(scene_distance(scene_from_json(before), scene_from_json(after)), 1e-15);
}

TEST(Service, MultipoleSession) {
    Service svc;
    const Response r = call(svc, "POST", "/session", {{"n", 3}, {"basis", "multipole"}, {"state", "W"}, {"grid", {{"n_theta", 6}, {"n_phi", 8}}}});
    ASSERT_EQ(r.status, 201);
    EXPECT_EQ(r.body["scene"]["metadata"]["basis"], "multipole");
    EXPECT_EQ(r.body["scene"]["meshes"].size(), 1u);
}

TEST(SessionStoreTtl, IdleSessionsExpire) {
    SessionStore store(std::chrono::milliseconds(30));
    const auto s = store.create();
    EXPECT_EQ(s->id.size(), 32u);
    EXPECT_NE(store.find(s->id), nullptr);
    std::this_thread::sleep_for(std::chrono::milliseconds(80));
    EXPECT_EQ(store.find(s->id), nullptr);
    EXPECT_EQ(store.size(), 0u);
}

TEST(Http, LocalhostRoundTrip) {
    Service svc;
    httplib::Server server;
    bind_routes(server, svc);
    const int port = server.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client cli("127.0.0.1", port);
    auto labels = cli.Get("/basis/2/labels");
    ASSERT_TRUE(labels);
    EXPECT_EQ(labels->status, 200);
    EXPECT_EQ(labels->get_header_value("Content-Type"), "application/json");
    auto created = cli.Post("/session", R"({"n":2,"grid":{"n_theta":4,"n_phi":6}})", "application/json");
    ASSERT_TRUE(created);
    EXPECT_EQ(created->status, 201);
    const std::string id = json::parse(created->body)["id"];
    auto rotated = cli.Post("/session/" + id + "/rotate", R"({"axis":"y","angle":1.0})", "application/json");
    ASSERT_TRUE(rotated);
    EXPECT_EQ(rotated->status, 200);
    auto missing = cli.Get("/session/none/scene");
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404);
    server.stop();
    th.join();
}

TEST(Http, BindAddressFromEnvironment) {
    ::setenv("DROPS_BIND", "0.0.0.0", 1);
    ::setenv("DROPS_PORT", "9123", 1);
    const auto a = bind_address_from_env();
    EXPECT_EQ(a.host, "0.0.0.0");
    EXPECT_EQ(a.port, 9123);
    ::setenv("DROPS_PORT", "abc", 1);
    EXPECT_THROW(bind_address_from_env(), Error);
    ::unsetenv("DROPS_BIND");
    ::unsetenv("DROPS_PORT");
    EXPECT_EQ(bind_address_from_env().port, 8080);
}
