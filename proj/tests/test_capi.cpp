#include <doctest.h>

#include <kgraph/kgraph_c.h>

#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

struct Free {
    char* p = nullptr;
    ~Free() { kg_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Handle {
    kg_skeleton* sk = nullptr;
    ~Handle() { kg_skeleton_free(sk); }
};

}  // namespace

TEST_CASE("c api: fixture handles and document round trip") {
    Handle h;
    Free err;
    REQUIRE(kg_skeleton_fixture("ex43", 2, 0, &h.sk, &err.p) == KG_OK);
    Free doc{kg_skeleton_to_json(h.sk)};
    json j = json::parse(doc.str());
    CHECK(j["k"] == 2);
    CHECK(j["vertices"].size() == 4);

    Handle h2;
    Free err2;
    REQUIRE(kg_skeleton_from_json(doc.str().c_str(), &h2.sk, &err2.p) == KG_OK);
    Free doc2{kg_skeleton_to_json(h2.sk)};
    CHECK(json::parse(doc2.str()) == j);
}

TEST_CASE("c api: invalid input surfaces structured errors") {
    Handle h;
    Free err;
    CHECK(kg_skeleton_from_json("{ not json", &h.sk, &err.p) == KG_INVALID_SKELETON);
    CHECK(h.sk == nullptr);
    CHECK(json::parse(err.str()).contains("error"));

    Free report;
    CHECK(kg_validate_json("{\"k\": 1, \"vertices\": [\"v\", \"v\"]}", &report.p) ==
          KG_INVALID_SKELETON);
    json r = json::parse(report.str());
    CHECK(r["valid"] == false);

    Handle h3;
    Free err3;
    CHECK(kg_skeleton_fixture("bogus", 1, 0, &h3.sk, &err3.p) == KG_BAD_ARGUMENT);
}

TEST_CASE("c api: mce, vee, align") {
    Handle h;
    Free err;
    REQUIRE(kg_skeleton_fixture("ex43", 3, 0, &h.sk, &err.p) == KG_OK);

    Free m;
    REQUIRE(kg_mce(h.sk, "lam", "be", &m.p) == KG_OK);
    json jm = json::parse(m.str());
    CHECK(jm["mce"].size() == 4);

    Free bad;
    CHECK(kg_mce(h.sk, "lam", "missing", &bad.p) == KG_BAD_ARGUMENT);
    CHECK(json::parse(bad.str()).contains("error"));

    const char* lits[] = {"00", "lam"};
    Free v;
    REQUIRE(kg_vee(h.sk, lits, 2, &v.p) == KG_OK);
    CHECK(json::parse(v.str())["veeF"].size() == 2);

    Free a;
    REQUIRE(kg_align(h.sk, "1,1", &a.p) == KG_OK);
    CHECK(json::parse(a.str())["maxGeneratorMce"] == 4);
}

TEST_CASE("c api: check and faithful run end to end") {
    Handle h;
    Free err;
    REQUIRE(kg_skeleton_fixture("loops", 2, 0, &h.sk, &err.p) == KG_OK);

    Free c;
    REQUIRE(kg_check(h.sk, "3", 1e-9, 11, 4, &c.p) == KG_OK);
    json jc = json::parse(c.str());
    CHECK(jc["status"] == "pass");

    Free f;
    REQUIRE(kg_faithful(h.sk, "v", "{\"1\": [\"a\"]}", nullptr, "3", &f.p) == KG_OK);
    json jf = json::parse(f.str());
    CHECK(jf["nonzero"] == true);
    CHECK(jf["witness"] == "v");

    Free bad;
    CHECK(kg_check(h.sk, "3", -1.0, 0, 4, &bad.p) == KG_BAD_ARGUMENT);
}
