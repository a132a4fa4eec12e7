#include <string>

#include "doctest.h"

#include "raagpl/checker.hpp"
#include "raagpl/errors.hpp"
#include "raagpl/json_io.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/textio.hpp"
#include "raagpl/witness.hpp"

using namespace raagpl;

namespace {

json make_cert(const Graph& g, const std::string& word_text) {
    const Witness wit = build_witness(g, parse_word_text(g, word_text));
    return certificate_to_json(wit, verify_witness(wit));
}

const Graph free2({"a", "b"}, {});
const Graph edge2({"a", "b"}, {{"a", "b"}});
const Graph path3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});

} // namespace

TEST_CASE("checker accepts genuine certificates") {
    for (const auto& [g, text] : std::vector<std::pair<Graph, std::string>>{
             {free2, "a b"},
             {free2, "a b a^-1 b^-1"},
             {edge2, "a b"},
             {path3, "c a b"},
             {path3, "a^3 c^-2 b a"},
         }) {
        const CheckReport rep = check_certificate(make_cert(g, text));
        CAPTURE(text);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("checker rejects tampered fields") {
    const json base = make_cert(free2, "a b");

    const auto fails = [](json doc) {
        const CheckReport rep = check_certificate(doc);
        return !rep.ok && !rep.failures.empty();
    };

    json t = base;
    t["image"] = "1/3";
    CHECK(fails(t));

    t = base;
    t["stages"][1]["out"] = "10/3";
    CHECK(fails(t));

    t = base;
    t["spine"][0]["sigma"] = -1;
    CHECK(fails(t));

    t = base;
    t["blocks"][0]["b"] = 2;
    CHECK(fails(t));

    t = base;
    t["images"]["a"]["bp"][0] = "1/16";
    CHECK(fails(t));

    t = base;
    t["verified"] = false;
    CHECK(fails(t));

    t = base;
    t["test_point"] = "1";
    CHECK(fails(t));

    t = base;
    t["k"] = 3;
    CHECK(fails(t));

    t = base;
    t["target"][0] = "1/2";
    CHECK(fails(t));

    t = base;
    t["element"].push_back(json{{"v", "a"}, {"s", 1}});
    CHECK(fails(t));
}

TEST_CASE("specific failure messages") {
    const json base = make_cert(free2, "a b");

    json t = base;
    t["image"] = "1/3";
    const CheckReport rep = check_certificate(t);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.failures.front().find("image") != std::string::npos);

    t = base;
    t["format"] = "raag-pl-certificate/2";
    const CheckReport fmt = check_certificate(t);
    REQUIRE_FALSE(fmt.ok);
    CHECK(fmt.failures.front().find("format") != std::string::npos);
}

TEST_CASE("edge commutation is checked pointwise") {
    // Over the complete graph on {a, b} with the single-letter word a, psi(b)
    // is unused by every stage, so only the edge-commutation re-check can see
    // a tampered psi(b) whose support overlaps psi(a)'s.
    json doc = make_cert(edge2, "a");
    REQUIRE(check_certificate(doc).ok);
    doc["images"]["b"] = plmap_to_json(translate_conjugate(rho0(), Rational(3, 2)));
    const CheckReport rep = check_certificate(doc);
    REQUIRE_FALSE(rep.ok);
    bool mentions_commute = false;
    for (const std::string& f : rep.failures)
        if (f.find("commut") != std::string::npos) mentions_commute = true;
    CHECK(mentions_commute);
}

TEST_CASE("structural problems are failures, not exceptions") {
    CHECK_THROWS_AS(check_certificate(json::array()), input_error);
    CHECK_THROWS_AS(check_certificate(json("text")), input_error);

    json doc = make_cert(free2, "a b");
    doc.erase("stages");
    CHECK_FALSE(check_certificate(doc).ok);

    doc = make_cert(free2, "a b");
    doc["image"] = "not-a-number";
    CHECK_FALSE(check_certificate(doc).ok);

    doc = make_cert(free2, "a b");
    doc["images"].erase("a");
    CHECK_FALSE(check_certificate(doc).ok);

    doc = make_cert(free2, "a b");
    doc["graph"]["edges"].push_back(json::array({"a", "a"}));
    CHECK_FALSE(check_certificate(doc).ok);

    CHECK_FALSE(check_certificate(json::object()).ok);
}

TEST_CASE("the checker notices an added edge") {
    // Tampering the graph so the picked vertices look adjacent must fail:
    // consecutive spine picks may not commute, and the images overlap.
    json doc = make_cert(free2, "a b");
    doc["graph"]["edges"].push_back(json::array({"a", "b"}));
    CHECK_FALSE(check_certificate(doc).ok);
}
