#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"
#include "kfl/io.hpp"
#include "kfl/lift_maps.hpp"
#include "kfl/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kfl;

namespace {
std::string data(const std::string& name) { return std::string(KFL_TEST_DATA_DIR) + "/" + name; }
}  // namespace

TEST(Json, PointSetRoundTrip) {
    auto set = point_set_from_json_text(R"({"dim":2,"points":[["1/2",3],["0.25","-1e1"]],"labels":["a","b"]})");
    EXPECT_EQ(set[0], (Point{Rational(1, 2), Rational(3)}));
    EXPECT_EQ(set[1], (Point{Rational(1, 4), Rational(-10)}));
    EXPECT_EQ(set.labels(), (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(point_set_from_json(point_set_to_json(set)), set);
    EXPECT_EQ(point_set_to_json(set)["points"][0][0], "1/2");
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(point_set_from_json_text("{"), InputError);
    EXPECT_THROW(point_set_from_json_text(R"({"dim":2,"points":[["1"]]})"), InputError);
    EXPECT_THROW(point_set_from_json_text(R"({"dim":2,"points":[["x","1"]]})"), InputError);
    EXPECT_THROW(point_set_from_json_text(R"({"points":[["1","1"]]})"), InputError);
    EXPECT_THROW(point_set_from_json_text(R"({"dim":1,"points":[[0.5]]})"), InputError);
}

TEST(Csv, RoundTripAndFiles) {
    auto set = point_set_from_csv("x1,x2\n1,2\n3/4,-5\n");
    EXPECT_EQ(set.size(), 2u);
    EXPECT_EQ(point_set_from_csv(point_set_to_csv(set)), set);
    EXPECT_THROW(point_set_from_csv("x1,x2\n1\n"), InputError);
    auto collinear = read_point_set_file(data("collinear.csv"));
    EXPECT_EQ(collinear.size(), 3u);
    auto tc = read_point_set_file(data("triangle_center.json"));
    EXPECT_EQ(tc.labels()[3], "D");
    EXPECT_THROW(read_point_set_file(data("missing.json")), InputError);
}

TEST(Json, CertificatesAndMaps) {
    FaceCertificate c{Hyperplane{{Rational(1, 3), Rational(-2)}, Rational(5)}, false};
    EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
    auto m = veronese(2, 2);
    auto back = map_from_json(map_to_json(m).dump());
    EXPECT_EQ(back.exponents(), m.exponents());
    auto witness = radon_partition(oracle::integer_set(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    auto doc = radon_to_json(witness);
    EXPECT_EQ(doc["Q"], Json::array({0, 2}));
    EXPECT_EQ(doc["point"], Json::array({"1/2", "1/2"}));
}

TEST(RunCount, FacetsAndSets) {
    auto tc = read_point_set_file(data("triangle_center.json"));
    auto facets = run_count(tc, "", CountMode::Facets, std::nullopt);
    EXPECT_EQ(facets["profile"], Json::array({3, 6, 3}));
    EXPECT_FALSE(facets.contains("facets"));
    auto with_k = run_count(tc, "identity:2", CountMode::Facets, 0);
    EXPECT_EQ(with_k["facets"].size(), 3u);
    auto sets = run_count(tc, "", CountMode::Sets, 1);
    EXPECT_EQ(sets["ksets"].size(), 3u);
    EXPECT_THROW(run_count(tc, "", CountMode::Sets, std::nullopt), InputError);
    auto lifted = run_count(tc, "circle", CountMode::Facets, std::nullopt);
    EXPECT_EQ(lifted["p"], 3);
}

TEST(RunVerify, EveryTheoremPasses) {
    for (const auto& name : verify_theorems()) {
        auto report = run_verify(name, {}, 5);
        EXPECT_TRUE(report.pass) << report.to_json().dump();
        EXPECT_FALSE(report.to_json().contains("instance"));
        EXPECT_EQ(report.to_json()["theorem"], name);
    }
}

TEST(RunVerify, WorkerCountAndSeedDeterminism) {
    auto a = run_verify("circles", {{"n", 9}}, 3, 1).to_json();
    auto b = run_verify("circles", {{"n", 9}}, 3, 4).to_json();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a["params"]["n"], 9);
    EXPECT_EQ(a["measured"]["halving_unoriented"], 16);
}

TEST(RunVerify, UnknownInputs) {
    EXPECT_THROW(run_verify("nope", {}, 1), InputError);
    EXPECT_THROW(run_verify("circles", {{"q", 1}}, 1), InputError);
}

TEST(VerifyReport, FailureCarriesInstance) {
    VerifyReport r;
    r.theorem = "circles";
    r.pass = false;
    r.instance = oracle::integer_set(2, {{0, 0}, {1, 0}});
    auto doc = r.to_json();
    ASSERT_TRUE(doc.contains("instance"));
    EXPECT_EQ(doc["instance"]["dim"], 2);
    r.pass = true;
    EXPECT_FALSE(r.to_json().contains("instance"));
}
