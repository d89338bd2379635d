#include <catch2/catch_amalgamated.hpp>

#include "raag/analysis.hpp"
#include "raag/construction.hpp"
#include "raag/sampling.hpp"
#include "raag/serialize.hpp"

#include "oracles.hpp"

using raag::Graph;
using raag::Transvection;
using raag::VertexSet;

namespace {

Graph lambda0() { return Graph({"v1", "v2", "v3"}, {}); }

Graph p3() { return Graph({"v1", "v2", "v3"}, {{"v1", "v2"}, {"v2", "v3"}}); }

Graph complete(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("k" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
    return Graph(v, e);
}

}  // namespace

TEST_CASE("legal transvections") {
    SECTION("single vertex: none (i != j required)") {
        CHECK(raag::legal_transvections(Graph({"x"}, {})).empty());
    }
    SECTION("one edge: both directions") {
        auto tv = raag::legal_transvections(Graph({"x", "y"}, {{"x", "y"}}));
        REQUIRE(tv.size() == 2);
        CHECK(tv[0] == Transvection{"x", "y"});
        CHECK(tv[1] == Transvection{"y", "x"});
    }
    SECTION("two isolated vertices: empty links are contained everywhere") {
        auto tv = raag::legal_transvections(Graph({"x", "y"}, {}));
        CHECK(tv.size() == 2);
    }
    SECTION("constructed graphs admit none") {
        CHECK(raag::legal_transvections(raag::build_gamma(lambda0())).empty());
        CHECK(raag::legal_transvections(raag::build_gamma_prime(p3())).empty());
    }
    SECTION("agrees with a set-algebra scan") {
        raag::Rng rng(550);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = raag::random_graph(rng, 1 + rng.below(8), rng.unit(), "t");
            auto got = raag::legal_transvections(g);
            std::vector<Transvection> want;
            for (const auto& u : g.vertices())
                for (const auto& w : g.vertices()) {
                    if (u == w) continue;
                    auto lk = oracle::to_set(raag::link(g, u));
                    auto st = oracle::to_set(raag::star(g, w));
                    if (std::includes(st.begin(), st.end(), lk.begin(), lk.end()))
                        want.push_back({u, w});
                }
            CHECK(got == want);
        }
    }
}

TEST_CASE("partial conjugations") {
    SECTION("complete graph: none") {
        CHECK(raag::partial_conjugations(complete(4)).empty());
    }
    SECTION("star graph: leaves cut the other leaves apart") {
        Graph k13({"h", "x", "y", "z"}, {{"h", "x"}, {"h", "y"}, {"h", "z"}});
        auto pc = raag::partial_conjugations(k13);
        // h contributes nothing; each leaf leaves the two others isolated
        REQUIRE(pc.size() == 6);
        CHECK(pc[0].acting == "x");
        CHECK(pc[0].component == VertexSet{"y"});
        CHECK(pc[1].acting == "x");
        CHECK(pc[1].component == VertexSet{"z"});
    }
    SECTION("counts match components of star-removals") {
        raag::Rng rng(551);
        for (int trial = 0; trial < 30; ++trial) {
            Graph g = raag::random_graph(rng, 1 + rng.below(8), rng.unit(), "p");
            std::size_t want = 0;
            for (const auto& v : g.vertices())
                want += oracle::comps_minus(g, raag::star(g, v)).size();
            CHECK(raag::partial_conjugations(g).size() == want);
        }
    }
}

TEST_CASE("witness table and the finite-index condition") {
    SECTION("constructed graph: containment exactly on the diagonal") {
        Graph g = raag::build_gamma(lambda0());
        auto rep = raag::finite_index_report(g);
        CHECK(rep.finite_index);
        CHECK(rep.transvections.empty());
        std::size_t n = g.vertex_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(rep.table.contained(i, j) == (i == j));
        // a few frozen cells, lexicographically smallest witnesses
        auto cell = [&](const char* u, const char* w) {
            return rep.table.cells[g.require_index(u)][g.require_index(w)];
        };
        CHECK(cell("a1", "a2") == "b1");
        CHECK(cell("c1", "c2") == "v1");  // witness among the defining vertices
        CHECK(cell("b1", "a1") == "d1");
        CHECK(cell("d1", "v1") == "c2");
        CHECK(cell("v1", "v2") == "c3");
    }
    SECTION("failing case: one edge") {
        auto rep = raag::finite_index_report(Graph({"x", "y"}, {{"x", "y"}}));
        CHECK_FALSE(rep.finite_index);
        CHECK(rep.transvections.size() == 2);
        CHECK(rep.table.contained(0, 1));
    }
    SECTION("the two finite-index paths agree") {
        raag::Rng rng(552);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = raag::random_graph(rng, 1 + rng.below(8), rng.unit(), "w");
            auto rep = raag::finite_index_report(g);
            CHECK(rep.finite_index == raag::legal_transvections(g).empty());
            CHECK(rep.transvections == raag::legal_transvections(g));
        }
    }
}

TEST_CASE("quotient order") {
    SECTION("infinite index: absent") {
        CHECK_FALSE(raag::quotient_order(complete(3)).has_value());
        CHECK_FALSE(raag::quotient_order(Graph({"x", "y"}, {{"x", "y"}})).has_value());
    }
    SECTION("rigid construction: exactly 2^N") {
        Graph gp = raag::build_gamma_prime(p3());
        auto q = raag::quotient_order(gp);
        REQUIRE(q.has_value());
        CHECK(*q == raag::pow2(15));  // 32768, aut is trivial
        CHECK(*q == 32768);
    }
    SECTION("symmetric construction: 2^N times the graph symmetries") {
        Graph g = raag::build_gamma(lambda0());
        auto q = raag::quotient_order(g);
        REQUIRE(q.has_value());
        CHECK(*q == raag::pow2(12) * oracle::backtrack_aut_count(g));
        CHECK(*q == raag::bigint(4096) * 2);  // the v2<->v3, c1<->c3 swap
    }
}

TEST_CASE("analyze") {
    SECTION("empty graph is rejected") {
        CHECK_THROWS_AS(raag::analyze(Graph()), raag::error);
    }
    SECTION("complete K4") {
        auto rep = raag::analyze(complete(4));
        CHECK(rep.forests_ok);
        REQUIRE(rep.theta.has_value());
        CHECK(rep.theta->vertices.empty());
        CHECK_FALSE(rep.finite_index);
        CHECK(rep.transvections.size() == 12);  // all ordered pairs
        CHECK(rep.partial_conjugation_count == 0);
        CHECK(rep.inversion_count == 4);
        CHECK(rep.aut_order == 24);
        CHECK_FALSE(rep.quotient_order.has_value());
    }
    SECTION("single vertex") {
        auto rep = raag::analyze(Graph({"x"}, {}));
        CHECK(rep.forests_ok);
        CHECK(rep.finite_index);
        CHECK(rep.inversion_count == 1);
        REQUIRE(rep.quotient_order.has_value());
        CHECK(*rep.quotient_order == 2);
    }
    SECTION("rigid constructed graph") {
        auto rep = raag::analyze(raag::build_gamma_prime(p3()));
        CHECK(rep.forests_ok);
        CHECK(rep.finite_index);
        CHECK(rep.aut_order == 1);
        REQUIRE(rep.theta.has_value());
        CHECK(rep.theta->vertices.size() == 3);
        REQUIRE(rep.quotient_order.has_value());
        CHECK(*rep.quotient_order == 32768);
    }
    SECTION("cyclic support graph: no theta, everything else present") {
        auto rep = raag::analyze(Graph({"1", "2", "3", "4"}, {}));
        CHECK_FALSE(rep.forests_ok);
        CHECK_FALSE(rep.theta.has_value());
        // empty links are contained in every star: transvections everywhere
        CHECK_FALSE(rep.finite_index);
        CHECK(rep.transvections.size() == 12);
        CHECK(rep.aut_order == 24);
    }
}

TEST_CASE("report serialization is stable and faithful") {
    auto rep = raag::analyze(p3());
    raag::json j = raag::to_json(rep);
    CHECK(j["finite_index"] == false);
    CHECK(j["inversion_count"] == 3);
    CHECK(j["witness_table"]["vertices"].size() == 3);
    CHECK(j["quotient_order"].is_null());
    // byte-stable across repeated runs
    CHECK(j.dump(2) == raag::to_json(raag::analyze(p3())).dump(2));

    // big orders serialize as decimal strings
    raag::bigint big = raag::pow2(100);
    CHECK(raag::to_json(big).is_string());
    CHECK(raag::to_json(big).get<std::string>() == big.str());
    CHECK(raag::to_json(raag::bigint(7)).is_number());
}
