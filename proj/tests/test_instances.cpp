#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "skelcat/instances.hpp"

using namespace skelcat;

namespace {
const Tolerance tol{};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("pointed constructor from explicit cocycle tables") {
    auto G = make_cyclic_group(2);
    std::vector<Scalar> triv(8, Scalar(1));
    auto fd = make_pointed(G, triv);
    auto ref = make_pointed_cyclic(2, 0);
    CHECK(fd.n() == 2);
    CHECK(fd.dual == ref.dual);
    CHECK(fd.Nmult.data == ref.Nmult.data);
    CHECK(fd.F.at({1, 1, 1, 1, 0, 0}) == Scalar(1));

    std::vector<Scalar> sign(8, Scalar(1));
    sign[7] = Scalar(-1);  // w(g,g,g) = -1
    auto fd2 = make_pointed(G, sign);
    CHECK(verify_pentagon(fd2, tol).pass);

    auto G3 = make_cyclic_group(3);
    std::vector<Scalar> bad(27, Scalar(1));
    bad[26] = Scalar(-1);  // w(g2,g2,g2) = -1 is not a Z/3 cocycle
    CHECK_THROWS_AS(make_pointed(G3, bad), NotACocycle);
    std::vector<Scalar> unnorm(8, Scalar(1));
    unnorm[0] = Scalar(2);
    CHECK_THROWS_AS(make_pointed(G, unnorm), NotACocycle);
}

TEST_CASE("every bundled file round-trips save -> parse -> save") {
    for (const auto& [name, file] : bundled_corpus()) {
        CAPTURE(name);
        std::string s1 = save_instance(file);
        InstanceFile back = parse_instance(s1);
        CHECK(back.warnings.empty());
        CHECK(save_instance(back) == s1);
    }
}

TEST_CASE("committed corpus files match the in-memory corpus byte for byte") {
    for (const auto& [name, file] : bundled_corpus()) {
        CAPTURE(name);
        CHECK(slurp(std::string(SKELCAT_DATA_DIR) + "/" + name) ==
              save_instance(file));
    }
}

TEST_CASE("loaded blocks reproduce the constructors") {
    auto f = load_instance(std::string(SKELCAT_DATA_DIR) + "/fib.json");
    REQUIRE(f.fusion.size() == 2);
    CHECK(f.fusion[0].F == make_fibonacci().F);
    REQUIRE(f.context.has_value());
    CHECK(verify_context_coherence(*f.context, tol).pass);

    auto g = load_instance(std::string(SKELCAT_DATA_DIR) +
                           "/vec_z2_trivial.json");
    REQUIRE(g.context_grading.has_value());
    CHECK(validate_grading(*g.context, *g.context_grading).pass);
    REQUIRE(g.module.size() == 2);
    CHECK(g.module[1].nm() == 1);  // the one-label module over the base
}

TEST_CASE("strict mode rejects unknown fields; lenient mode warns") {
    InstanceFile f;
    f.fusion = {make_vec()};
    std::string s = save_instance(f);
    s.insert(s.rfind('}'), ",\"extra_field\": 1\n");
    CHECK_THROWS_AS(parse_instance(s, true), SchemaError);
    InstanceFile lenient = parse_instance(s, false);
    REQUIRE(lenient.warnings.size() == 1);
    CHECK(lenient.warnings[0].find("extra_field") != std::string::npos);
}

TEST_CASE("schema defects are reported as SchemaError") {
    CHECK_THROWS_AS(parse_instance("not json at all"), SchemaError);
    CHECK_THROWS_AS(parse_instance("{\"schema_version\":\"9.9\",\"gauge\":"
                                   "\"g\",\"fusion\":[]}"),
                    SchemaError);
    InstanceFile f;
    f.fusion = {make_vec()};
    f.module = {make_regular_module(make_vec())};
    f.module[0].base.name = "nonexistent";
    CHECK_THROWS_AS(parse_instance(save_instance(f)), SchemaError);
    // structural defect inside a block: dual is not an involution
    InstanceFile g;
    g.fusion = {make_pointed_cyclic(3, 0)};
    g.fusion[0].dual = {0, 1, 2};
    CHECK_THROWS_AS(parse_instance(save_instance(g)), SchemaError);
    CHECK_THROWS_AS(load_instance("/nonexistent/missing.json"), SchemaError);
}

TEST_CASE("pivotal and serre seed blocks survive the round trip") {
    InstanceFile f;
    f.fusion = {make_pointed_cyclic(2, 0)};
    f.module = {make_vec_module(f.fusion[0])};
    f.pivotal = {{"pointed-z2-q0", {Scalar(1), Scalar(-1)}}};
    f.serre = {{f.module[0].name, {0}}};
    InstanceFile back = parse_instance(save_instance(f));
    REQUIRE(back.pivotal.size() == 1);
    CHECK(back.pivotal[0].p == f.pivotal[0].p);
    REQUIRE(back.serre.size() == 1);
    CHECK(back.serre[0].object_map == f.serre[0].object_map);
}
