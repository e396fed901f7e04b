#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltasieve/series.hpp"

#include <random>

using namespace deltasieve;

namespace {

BigInt od(const SeriesRow &r, Deck d) {
    const auto &cell = r.od_of(d);
    REQUIRE(cell.has_value());
    return *cell;
}

} // namespace

TEST_CASE("dial resolution follows isqrt and d1 parity") {
    // n=137: isqrt 11 odd -> a2; d1=12 even -> v1.
    auto r = resolve_dials(137, DialPair{-1, 1, 2, 4});
    CHECK(r.d1 == 12);
    CHECK(r.d2 == 14);
    // n=147: isqrt 12 even -> a1; d1=11 odd -> v2.
    r = resolve_dials(147, DialPair{-1, 1, 2, 4});
    CHECK(r.d1 == 11);
    CHECK(r.d2 == 15);
    // n=13: isqrt 3 odd -> a2=-1; d1=2 even -> v1.
    r = resolve_dials(13, DialPair{0, -1, 2, 2});
    CHECK(r.d1 == 2);
    CHECK(r.d2 == 4);
}

TEST_CASE("delta 12 odd series reproduces the reference rows") {
    SeriesSpec spec = SeriesSpec::delta_series(12, Parity::odd, DialPair{0, -1, 2, 2});
    const auto rows = generate(spec, GenLimit::rows(8));
    REQUIRE(rows.size() == 8);

    // id,p,q,n,isqrt,d1,d2,od1,od2,od3,od4,od6
    const long long expect[8][12] = {
        {1, 1, 13, 13, 3, 2, 4, -9, 3, 12, -6, 5},
        {2, 3, 15, 45, 6, 6, 8, -9, 19, 28, 10, 3},
        {3, 5, 17, 85, 9, 8, 10, -21, 15, 36, -6, 5},
        {4, 7, 19, 133, 11, 10, 12, -33, 11, 44, -22, 13},
        {5, 9, 21, 189, 13, 12, 14, -45, 7, 52, -38, 21},
        {6, 11, 23, 253, 15, 14, 16, -57, 3, 60, -54, 29},
        {7, 13, 25, 325, 18, 18, 20, -1, 75, 76, 74, 35},
        {8, 15, 27, 405, 20, 20, 22, -5, 79, 84, 74, 35},
    };
    for (int i = 0; i < 8; ++i) {
        const auto &r = rows[i];
        CHECK(r.id == expect[i][0]);
        CHECK(r.p == expect[i][1]);
        CHECK(r.q == expect[i][2]);
        CHECK(r.n == expect[i][3]);
        CHECK(r.isqrt_n == expect[i][4]);
        CHECK(r.d1 == expect[i][5]);
        CHECK(r.d2 == expect[i][6]);
        CHECK(od(r, Deck::od1) == expect[i][7]);
        CHECK(od(r, Deck::od2) == expect[i][8]);
        CHECK(od(r, Deck::od3) == expect[i][9]);
        CHECK(od(r, Deck::od4) == expect[i][10]);
        CHECK(od(r, Deck::od6) == expect[i][11]);
    }
}

TEST_CASE("single-row examples across kinds") {
    SUBCASE("delta 22 even, p=50") {
        SeriesSpec spec = SeriesSpec::delta_series(22, Parity::even, DialPair{0, -1, 2, 2});
        const SeriesRow r = compute_row(spec, 50);
        CHECK(r.n == 3600);
        CHECK(od(r, Deck::od4) == 244);
        CHECK(od(r, Deck::od6) == 120);
    }
    SUBCASE("sum 22 at p=11") {
        SeriesSpec spec = SeriesSpec::sum_series(22, Parity::odd, DialPair{-1, 0, 2, 2});
        const SeriesRow r = compute_row(spec, 11);
        CHECK(r.n == 121);
        CHECK(od(r, Deck::od1) == 0);
        CHECK(od(r, Deck::od2) == 48);
        CHECK(od(r, Deck::od6) == 22);
    }
    SUBCASE("sum series tail row with q = 0") {
        SeriesSpec spec = SeriesSpec::sum_series(20, Parity::even, DialPair{-1, 0, 2, 2});
        const SeriesRow r = compute_row(spec, 20);
        CHECK(r.q == 0);
        CHECK(r.n == 0);
        CHECK(r.isqrt_n == 0);
        CHECK(r.d1 == -1); // isqrt 0 is even -> a1=-1; negative d1 permitted
        CHECK(r.d2 == 1);
        CHECK(od(r, Deck::od1) == 1);
        CHECK(od(r, Deck::od2) == 1);
        CHECK(od(r, Deck::od4) == 2);
        CHECK(od(r, Deck::od6) == 1);
    }
}

TEST_CASE("delta 46 od5 steady span") {
    SeriesSpec spec = SeriesSpec::delta_series(46, Parity::odd, DialPair{-1, -2, 4, 4});
    const auto rows = generate(spec, GenLimit::rows(60));
    REQUIRE(rows.size() == 60);
    for (int id = 56; id <= 60; ++id)
        CHECK(od(rows[id - 1], Deck::od5) == 2128);
    CHECK(od(rows[54], Deck::od5) == 32); // id=55, still pre-steady
}

TEST_CASE("sum 20 od6 column is palindromic") {
    SeriesSpec spec = SeriesSpec::sum_series(20, Parity::odd, DialPair{-1, 0, 2, 2});
    const auto rows = generate(spec, GenLimit::rows(100));
    REQUIRE(rows.size() == 10); // exhausts at p=19
    const long long expect[10] = {4, 12, 12, 8, 0, 0, 8, 12, 12, 4};
    for (int i = 0; i < 10; ++i)
        CHECK(od(rows[i], Deck::od6) == expect[i]);
    // Mirror symmetry: row(p) and row(sum - p) agree on n and every deck.
    for (int i = 0; i < 10; ++i) {
        const auto &a = rows[i];
        const auto &b = rows[9 - i];
        CHECK(a.n == b.n);
        for (int d = 0; d < kDeckCount; ++d) {
            REQUIRE(a.od[d].has_value() == b.od[d].has_value());
            if (a.od[d])
                CHECK(*a.od[d] == *b.od[d]);
        }
    }
}

TEST_CASE("deck identities and df chaining on random series") {
    std::mt19937_64 rng(2024);
    int checked_rows = 0;
    for (int rep = 0; rep < 120; ++rep) {
        SeriesSpec spec;
        spec.kind = rep % 3 == 0 ? SeriesKind::sum : SeriesKind::delta;
        spec.p_parity = rep % 2 == 0 ? Parity::odd : Parity::even;
        spec.value = 2 * (rng() % 400) + (spec.kind == SeriesKind::delta && rep % 5 == 0 ? 1 : 0);
        if (spec.value < 8)
            spec.value += 8;
        long long choices[4][4] = {{0, -1, 2, 2}, {-1, 0, 2, 2}, {-2, -1, 4, 4}, {-2, 2, 12, 12}};
        auto &c = choices[rng() % 4];
        spec.dials = {DialPair{c[0], c[1], c[2], c[3]}};
        const auto rows = generate(spec, GenLimit::rows(90));
        REQUIRE(!rows.empty());
        std::optional<BigInt> prev_od1;
        BigInt recon; // od1 rebuilt from df chain
        for (const auto &r : rows) {
            const BigInt od1 = od(r, Deck::od1), od2 = od(r, Deck::od2);
            CHECK(od(r, Deck::od3) == od2 - od1);
            CHECK(od(r, Deck::od4) == od2 + od1);
            CHECK(od(r, Deck::od5) == od1 + od2 + (od2 - od1) + (od1 + od2));
            // df convention: od(id) + df(id) = od(id-1)
            if (prev_od1)
                CHECK(od1 + *r.df_of(Deck::od1) == *prev_od1);
            else
                CHECK(*r.df_of(Deck::od1) == 0);
            // reconstruct od1 from the df chain
            if (!prev_od1)
                recon = od1;
            else
                recon = recon - *r.df_of(Deck::od1);
            CHECK(recon == od1);
            prev_od1 = od1;
            ++checked_rows;
        }
    }
    CHECK(checked_rows >= 10000);
}

TEST_CASE("od6 equals |od1 + v*d1| whenever v1 == v2") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 10000; ++rep) {
        const BigInt n = rng() % 1000000 + 1;
        const long long v = 2 * (rng() % 12 + 1);
        const long long a1 = static_cast<long long>(rng() % 7) - 3;
        const long long a2 = static_cast<long long>(rng() % 7) - 3;
        const DialPair dials{a1, a2, v, v};
        const ResolvedDials d = resolve_dials(n, dials);
        const BigInt od1 = d.d1 * d.d1 - n;
        const BigInt od2 = d.d2 * d.d2 - n;
        const BigInt radicand = n * v * v + od1 * od2;
        auto root = exact_sqrt(radicand);
        REQUIRE(root.has_value());
        CHECK(*root == abs(od1 + v * d.d1));
    }
}

TEST_CASE("steady-stop rule ends generation after k identical values") {
    SeriesSpec spec = SeriesSpec::delta_series(12, Parity::odd, DialPair{0, -1, 2, 2});
    const auto rows = generate(spec, GenLimit::steady(Deck::od4, 3));
    REQUIRE(rows.size() == 9); // 74 appears at ids 7,8,9
    CHECK(rows.back().id == 9);
    CHECK(od(rows.back(), Deck::od4) == 74);
}

TEST_CASE("spec validation rejects bad configurations") {
    SeriesSpec spec = SeriesSpec::delta_series(12, Parity::odd, DialPair{0, -1, 2, 2});
    spec.p_start = 2;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.p_start = 0;
    spec.decks = {Deck::od9};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    SeriesSpec sum = SeriesSpec::sum_series(22, Parity::odd, DialPair{-1, 0, 2, 2});
    CHECK_THROWS_AS(compute_row(sum, 23), std::invalid_argument);
    CHECK_THROWS_AS(compute_row(sum, 10), std::invalid_argument);
}

TEST_CASE("csv emission shape") {
    SeriesSpec spec = SeriesSpec::delta_series(12, Parity::odd, DialPair{0, -1, 2, 2});
    const SeriesRow r = compute_row(spec, 13);
    CHECK(series_csv_header() ==
          "id,p,q,n,isqrt_n,d1,d2,od1,od2,od3,od4,od5,od6,od7,od8,od9,od10,od11,"
          "df1,df2,df3,df4,df5,df6,df7,df8,df9,df10,df11");
    CHECK(series_csv_row(r) ==
          "1,13,25,325,18,18,20,-1,75,76,74,224,35,,,,,,0,0,0,0,0,0,,,,,");
}
