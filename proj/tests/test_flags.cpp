#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agflag/codes.hpp"
#include "agflag/flags.hpp"
#include "agflag/presets.hpp"

using namespace agflag;

TEST_CASE("flag_indices") {
    const auto herm = EvaluationSupport::standard(make_hermitian_curve(2), 1).params();
    SUBCASE("Hermitian q=2, b=0") {
        CHECK(flag_indices(herm, 0) == std::vector<long>{0, 2, 3, 4, 5, 6, 7});
    }
    SUBCASE("always starts at 0 and stays within the cap") {
        const auto nt = EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1).params();
        for (long b = 0; b <= 5; ++b) {
            const auto idx = flag_indices(nt, b);
            REQUIRE(!idx.empty());
            CHECK(idx.front() == 0);
            CHECK(idx.back() <= nt.n + 2 * nt.g - 2 - 2 * b);
            CHECK(std::is_sorted(idx.begin(), idx.end()));
        }
        CHECK(flag_indices(nt, 3).back() <= 41);
    }
    SUBCASE("b out of range is refused") {
        CHECK_THROWS_AS(flag_indices(herm, 2), BOutOfRangeError);  // needs n >= 2g+2b+2
        CHECK_THROWS_AS(flag_indices(herm, -1), BOutOfRangeError);
    }
}

TEST_CASE("isodual_fast") {
    SUBCASE("Hermitian q=2") {
        const auto p = EvaluationSupport::standard(make_hermitian_curve(2), 1).params();
        CHECK(!isodual_fast(p, 0));
        CHECK(isodual_fast(p, 1));
    }
    SUBCASE("norm-trace q=2 l=3: true exactly at b=3") {
        const auto p = EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1).params();
        for (long b = 0; b <= 5; ++b) CHECK(isodual_fast(p, b) == (b == 3));
    }
    SUBCASE("generalized Hermitian q=2 l=3 at b=4") {
        const auto p = EvaluationSupport::standard(make_gen_hermitian_curve(2, 3), 1).params();
        CHECK(isodual_fast(p, 4));
        CHECK(!isodual_fast(p, 5));
    }
}

TEST_CASE("isodual_kummer") {
    CHECK(isodual_kummer(7, 3));
    CHECK(isodual_kummer(9, 4));
    CHECK(!isodual_kummer(7, 2));
    for (long m : {4L, 6L, 8L, 10L})
        for (long b = 0; b <= 30; ++b) CHECK(!isodual_kummer(m, b));
}

TEST_CASE("fast criteria agree on every preset") {
    const CurveParams presets[] = {
        EvaluationSupport::standard(make_hermitian_curve(2), 1).params(),
        EvaluationSupport::standard(make_hermitian_curve(3), 1).params(),
        EvaluationSupport::standard(make_hermitian_curve(4), 1).params(),
        EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1).params(),
        EvaluationSupport::standard(make_gen_hermitian_curve(2, 3), 1).params(),
    };
    for (const auto& p : presets) {
        const long b_max = (p.n - 2 * p.g - 2) / 2;
        for (long b = 0; b <= b_max; ++b) {
            CAPTURE(p.m);
            CAPTURE(b);
            CHECK(isodual_fast(p, b) == isodual_kummer(p.m, b));
        }
    }
}

TEST_CASE("isodual_b_list") {
    CHECK(isodual_b_list(EvaluationSupport::standard(make_gen_hermitian_curve(2, 3), 1).params()) ==
          std::vector<long>{4, 13, 22, 31, 40, 49, 58});
    CHECK(isodual_b_list(EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1).params()) ==
          std::vector<long>{3});
    CHECK(isodual_b_list(EvaluationSupport::standard(make_hermitian_curve(2), 1).params()) ==
          std::vector<long>{1});
    // m = q + 1 is even for odd q
    CHECK(isodual_b_list(EvaluationSupport::standard(make_hermitian_curve(3), 1).params()).empty());
}

TEST_CASE("hermitian_hb_star") {
    SUBCASE("q=2, b=0") {
        CHECK(hermitian_hb_star(2, 0) == std::vector<long>{0, 2, 3, 4, 5, 6, 7});
    }
    SUBCASE("q=2, b=2 contains 6") {
        const auto s = hermitian_hb_star(2, 2);
        CHECK(std::binary_search(s.begin(), s.end(), 6));
    }
    SUBCASE("matches the Kummer closed form for q in {2,3,4}") {
        for (long q : {2L, 3L, 4L}) {
            const auto p = EvaluationSupport::standard(make_hermitian_curve(q), 1).params();
            for (long b = 0; b <= q; ++b) {
                CAPTURE(q);
                CAPTURE(b);
                CHECK(hermitian_hb_star(q, b) == hb_star_closed(p, b).members);
            }
        }
    }
    SUBCASE("periodic reduction for b > q") {
        const auto p = EvaluationSupport::standard(make_hermitian_curve(2), 1).params();
        for (long b = 3; b <= 10; ++b) CHECK(hermitian_hb_star(2, b) == hb_star_closed(p, b).members);
    }
    SUBCASE("negative b is refused") { CHECK_THROWS_AS(hermitian_hb_star(2, -1), BOutOfRangeError); }
}

TEST_CASE("hermitian_isodual") {
    SUBCASE("odd q never") {
        for (long b = 0; b <= 8; ++b) CHECK(!hermitian_isodual(3, b));
    }
    SUBCASE("q=4: true iff b = 2 mod 5") {
        for (long b = 0; b <= 24; ++b) CHECK(hermitian_isodual(4, b) == (b % 5 == 2));
    }
    SUBCASE("q=2") {
        CHECK(!hermitian_isodual(2, 0));
        CHECK(hermitian_isodual(2, 1));
        CHECK_THROWS_AS(hermitian_isodual(2, 2), BOutOfRangeError);
    }
}

TEST_CASE("verify_flag") {
    SUBCASE("Hermitian q=2, b=1: verified dual with a working witness") {
        const auto support = EvaluationSupport::standard(make_hermitian_curve(2), 1);
        const FlagReport rep = verify_flag(support, 1);
        CHECK(rep.fast_general);
        CHECK(rep.fast_kummer);
        CHECK(rep.oracle == OracleStatus::verified_dual);
        REQUIRE(rep.witness.has_value());
        REQUIRE(rep.witness->size() == 7);
        // re-verify the witness from scratch against every dual pair
        const std::size_t s = rep.indices.size() - 1;
        for (std::size_t i = 0; i < rep.indices.size(); ++i) {
            const auto ci = build_code(support, rep.indices[i], 1);
            const auto cj = build_code(support, rep.indices[s - i], 1);
            CHECK(ci.dim + cj.dim == support.n());
            CHECK(rowspace_equal(ci.gen, scale_columns(dual(cj), *rep.witness)));
        }
    }
    SUBCASE("norm-trace b=0: verified not dual") {
        const auto support = EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1);
        const FlagReport rep = verify_flag(support, 0);
        CHECK(!rep.fast_general);
        CHECK(!rep.fast_kummer);
        CHECK(rep.oracle == OracleStatus::verified_not_dual);
        CHECK(!rep.witness.has_value());
    }
    SUBCASE("norm-trace b=3: verified dual") {
        const auto support = EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1);
        const FlagReport rep = verify_flag(support, 3);
        CHECK(rep.fast_general);
        CHECK(rep.oracle == OracleStatus::verified_dual);
        REQUIRE(rep.witness.has_value());
        for (const auto& e : *rep.witness) CHECK(!e.is_zero());
    }
    SUBCASE("norm-trace b=3 stays verified dual for every choice of Q") {
        const auto curve = make_norm_trace_curve(2, 3);
        for (long k = 2; k <= curve.r(); ++k) {
            const auto support = EvaluationSupport::standard(curve, k);
            CAPTURE(k);
            CHECK(verify_flag(support, 3).oracle == OracleStatus::verified_dual);
            CHECK(verify_flag(support, 2).oracle == OracleStatus::verified_not_dual);
        }
    }
    SUBCASE("skipping the oracle") {
        const auto support = EvaluationSupport::standard(make_hermitian_curve(2), 1);
        const FlagReport rep = verify_flag(support, 0, false);
        CHECK(rep.oracle == OracleStatus::skipped);
        CHECK(!rep.witness.has_value());
    }
}

TEST_CASE("oracle concordance over the whole valid range") {
    const EvaluationSupport supports[] = {
        EvaluationSupport::standard(make_hermitian_curve(2), 1),
        EvaluationSupport::standard(make_hermitian_curve(3), 1),
        EvaluationSupport::standard(make_norm_trace_curve(2, 3), 1),
    };
    for (const auto& support : supports) {
        const CurveParams p = support.params();
        const long b_max = (p.n - 2 * p.g - 2) / 2;
        for (long b = 0; b <= b_max; ++b) {
            CAPTURE(p.m);
            CAPTURE(b);
            const FlagReport rep = verify_flag(support, b);
            REQUIRE(rep.oracle != OracleStatus::inconclusive);
            CHECK(rep.fast_general == (rep.oracle == OracleStatus::verified_dual));
            CHECK(rep.fast_general == rep.fast_kummer);
            CHECK(rep.witness.has_value() == rep.fast_general);
        }
    }
}

TEST_CASE("flag report serialization") {
    const auto support = EvaluationSupport::standard(make_hermitian_curve(2), 1);
    SUBCASE("with witness") {
        const auto j = to_json(verify_flag(support, 1));
        CHECK(j["b"] == 1);
        CHECK(j["oracle_status"] == "verified-dual");
        CHECK(j["fast_general"] == true);
        CHECK(j["fast_kummer"] == true);
        REQUIRE(j["witness"].is_array());
        CHECK(j["witness"].size() == 7);
        CHECK(j["indices"].is_array());
        CHECK(j["indices"][0] == 0);
    }
    SUBCASE("without witness") {
        const auto j = to_json(verify_flag(support, 0, false));
        CHECK(j["oracle_status"] == "skipped");
        CHECK(j["witness"].is_null());
    }
}
