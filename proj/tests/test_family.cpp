#include <catch2/catch_amalgamated.hpp>

#include <moncurve/family.hpp>
#include <moncurve/io.hpp>

using namespace moncurve;

TEST_CASE("family curves") {
    CHECK(family_curve(10, 1).str() == "21:0,10,18,19,21");
    CHECK(family_curve(5, 2).str() == "13:0,5,8,9,11,13");
    CHECK(family_curve(5, 3).str() == "15:0,5,8,9,11,13,15");

    CHECK_THROWS_MATCHES(family_curve(4, 1), error,
                         Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::params_out_of_range; }));
    CHECK_THROWS_AS(family_curve(5, 0), error);
}

TEST_CASE("family parameters") {
    auto p = FamilyParams::make(10, 1);
    CHECK(p.b1() == 10);
    CHECK(p.b2() == 18);
    CHECK(p.a(0) == 19);
    CHECK(p.d() == 21);
    CHECK(p.expected_new_generator() == Monomial{12, 30});
}

TEST_CASE("predictions") {
    SECTION("odd r with small n is strictly 1-Buchsbaum") {
        auto pred = predict(5, 2);
        CHECK(pred.classification == FamilyClass::buchsbaum_1);
        CHECK(pred.source == "XY(ii)");
        CHECK(pred.new_gen == Monomial{11, 15});
    }

    SECTION("odd r with large n is CM") {
        auto pred = predict(5, 3);
        CHECK(pred.classification == FamilyClass::cm);
        CHECK(pred.source == "XY(i)");
        CHECK_FALSE(pred.new_gen.has_value());
    }

    SECTION("r = 2n + 8 is strictly 2-Buchsbaum") {
        auto pred = predict(10, 1);
        CHECK(pred.classification == FamilyClass::strictly_2_buchsbaum);
        CHECK(pred.source == "XZ");
        CHECK(pred.new_gen == Monomial{12, 30});
    }

    SECTION("even r inside the regime") {
        auto pred = predict(6, 1);
        CHECK(pred.classification == FamilyClass::buchsbaum_1);
        CHECK(pred.source == "XY(iii)");
    }

    SECTION("outside both regimes nothing is claimed") {
        auto pred = predict(13, 2);  // 2n = 4 < 8 = r - 5 and r != 12
        CHECK(pred.classification == FamilyClass::unknown);
        CHECK(pred.source == "none");
        CHECK(pred.reg_eq_rq);
    }
}

TEST_CASE("row verification") {
    SECTION("the example rows match") {
        auto rows = verify_family(5, 5, 2, 3);
        REQUIRE(rows.size() == 2);
        for (const auto& row : rows) {
            CAPTURE(row.r, row.n, row.detail);
            CHECK(row.match);
        }
        CHECK(rows[0].report->k == 1);
        CHECK(rows[0].report->reg == 3);
        CHECK(rows[1].report->is_cm);
    }

    SECTION("the strictly 2-Buchsbaum row has residual zero") {
        auto row = verify_one(10, 1);
        REQUIRE(row.match);
        CHECK(row.report->k == 2);
        CHECK(row.report->new_generators == std::vector<Monomial>{{12, 30}});
        CHECK(row.question_residual == 0);
    }

    SECTION("even-r row computes level 1") {
        auto row = verify_one(6, 1);
        REQUIRE(row.match);
        CHECK(row.prediction.source == "XY(iii)");
        CHECK_FALSE(row.report->is_cm);
        CHECK(row.report->k == 1);
    }

    SECTION("unknown-regime rows still verify the shared claims") {
        auto row = verify_one(13, 2);
        CAPTURE(row.detail);
        CHECK(row.match);  // reg = r_Q and the Macaulayfication generator
        REQUIRE(row.report.has_value());
        CHECK(row.report->reg == row.report->r_q_r);
    }
}

TEST_CASE("membership facts behind the family classification") {
    SECTION("inside r <= 5 + 2n the marked monomial re-enters (s^d) after one t^d") {
        for (auto [r, n] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {6, 1}, {7, 1}, {9, 2}, {11, 3}}) {
            REQUIRE(r <= 5 + 2 * n);
            const FamilyParams p = FamilyParams::make(r, n);
            const Curve curve = family_curve(r, n);
            MonomialIdeal principal(curve, {{p.d(), 0}});
            CAPTURE(r, n);
            CHECK(principal.contains({3LL * p.d() - 3LL * p.b1(), 3LL * p.b1() + p.d()}));
        }
    }

    SECTION("CM exactly when the marked monomial already lies in (s^d)") {
        for (auto [r, n] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 4}, {9, 7}, {10, 1}, {6, 2}}) {
            const FamilyParams p = FamilyParams::make(r, n);
            const Curve curve = family_curve(r, n);
            MonomialIdeal principal(curve, {{p.d(), 0}});
            const bool marked_inside = principal.contains({3LL * p.d() - 3LL * p.b1(), 3LL * p.b1()});
            CAPTURE(r, n);
            CHECK(marked_inside == classify(curve).is_cm);
        }
    }
}

TEST_CASE("saturation of the squared parameter across the family") {
    // ((s^d)^2 : (t^d)^inf) = (s^2d, s^d * s^(3d-3r) t^(3r)) whenever
    // r <= 5 + 2n
    for (auto [r, n] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {7, 2}, {9, 2}, {8, 3}}) {
        REQUIRE(r <= 5 + 2 * n);
        const FamilyParams p = FamilyParams::make(r, n);
        const Curve curve = family_curve(r, n);
        const long long d = p.d();
        const int bound = default_degree_bound(curve);
        MonomialIdeal square(curve, {{2 * d, 0}});
        auto sat = saturate(square, {0, d}, bound);
        MonomialIdeal closed(curve, {{2 * d, 0}, {4 * d - 3LL * p.b1(), 3LL * p.b1()}});
        CAPTURE(r, n);
        CHECK(ideal_equal(sat, closed, bound).holds);
    }
}

TEST_CASE("sweeps") {
    SECTION("parallel and sequential sweeps agree") {
        auto seq = verify_family(5, 7, 1, 2, 1);
        auto par = verify_family(5, 7, 1, 2, 4);
        REQUIRE(seq.size() == par.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            CHECK(seq[i].r == par[i].r);
            CHECK(seq[i].n == par[i].n);
            CHECK(seq[i].match == par[i].match);
            CHECK(row_to_csv(seq[i]) == row_to_csv(par[i]));
        }
    }

    SECTION("range validation") {
        CHECK_THROWS_AS(verify_family(4, 5, 1, 2), error);
        CHECK_THROWS_AS(verify_family(5, 5, 0, 0), error);
        CHECK_THROWS_AS(verify_family(6, 5, 1, 2), error);
    }

    SECTION("summary counts") {
        auto rows = verify_family(5, 6, 1, 3);
        auto s = summarize(rows);
        CHECK(s.rows == 6);
        CHECK(s.matched == 6);
        CHECK(s.mismatched == 0);
        CHECK(s.errors == 0);
    }
}

TEST_CASE("report serialization") {
    auto row = verify_one(10, 1);
    REQUIRE(row.report.has_value());

    SECTION("JSON field order is fixed") {
        auto j = report_to_json(*row.report);
        std::string dumped = j.dump();
        CHECK(dumped.find("\"curve\"") < dumped.find("\"d\""));
        CHECK(dumped.find("\"d\"") < dumped.find("\"G\""));
        CHECK(dumped.find("\"G\"") < dumped.find("\"k\""));
        CHECK(dumped.find("\"reg\"") < dumped.find("\"is_CM\""));
        CHECK(dumped.find("\"criterion_checked\"") != std::string::npos);
        CHECK(j["k"] == 2);
        CHECK(j["l"] == 2);
        CHECK(j["rao_hilbert"] == json::array({0, 0, 1, 1}));
    }

    SECTION("identical inputs give identical bytes") {
        auto again = verify_one(10, 1);
        CHECK(report_to_json(*row.report).dump() == report_to_json(*again.report).dump());
        CHECK(row_to_csv(row) == row_to_csv(again));
    }

    SECTION("CSV row layout") {
        std::string csv = row_to_csv(row);
        CHECK(csv.rfind("10,1,21,", 0) == 0);
        CHECK(csv.find("\"0,10,18,19,21\"") != std::string::npos);
        CHECK(csv.find("strictly_2_Buchsbaum,XZ,true,0") != std::string::npos);
    }

    SECTION("CM rows serialize the empty data") {
        auto cm_row = verify_one(5, 3);
        auto j = report_to_json(*cm_row.report);
        CHECK(j["l"].is_null());
        CHECK(j["a_invariant"].is_null());
        std::string csv = row_to_csv(cm_row);
        CHECK(csv.find("-inf") != std::string::npos);
    }

    SECTION("the table cuts the Rao function past degree 12, JSON never does") {
        InvariantReport rep = *row.report;
        rep.rao_hilbert.assign(16, 1);
        CHECK(report_to_table(rep).find(",...") != std::string::npos);
        CHECK(report_to_json(rep)["rao_hilbert"].size() == 16);
        CHECK(report_to_table(*row.report).find("...") == std::string::npos);
    }
}
