#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltasieve/factor.hpp"

#include <random>

using namespace deltasieve;

TEST_CASE("quadratic_factor on reference pairs and misses") {
    auto r = quadratic_factor(325, 12);
    REQUIRE(r);
    CHECK(r->p == 13);
    CHECK(r->q == 25);
    r = quadratic_factor(BigInt("524038280401"), 137136);
    REQUIRE(r);
    CHECK(r->p == 658577);
    CHECK(r->q == 795713);
    CHECK_FALSE(quadratic_factor(100, 12)); // 544 is not a perfect square
    CHECK_FALSE(quadratic_factor(21, 2));   // square discriminant, wrong parity class
}

TEST_CASE("quadratic_factor succeeds for random odd pairs up to 512-bit products") {
    std::mt19937_64 rng(424242);
    auto random_odd = [&](int bits) {
        BigInt x = 0;
        for (int b = 0; b < bits; b += 32)
            x = (x << 32) | static_cast<std::uint32_t>(rng());
        return x | 1;
    };
    for (int rep = 0; rep < 300; ++rep) {
        const int bits = 16 + static_cast<int>(rng() % 240);
        BigInt p = random_odd(bits), q = random_odd(bits);
        if (p > q)
            std::swap(p, q);
        const BigInt n = p * q;
        auto r = quadratic_factor(n, q - p);
        REQUIRE(r);
        CHECK(r->p == p);
        CHECK(r->q == q);
        CHECK(r->p * r->q == n);
    }
}

TEST_CASE("factor_zone0 recovers composites sitting in zone 0") {
    auto r = factor_zone0(405);
    REQUIRE(r);
    CHECK(r->p == 15);
    CHECK(r->q == 27);
    CHECK(r->delta == 12);
    CHECK(r->method == "zone0");

    r = factor_zone0(3848);
    REQUIRE(r);
    CHECK(r->p == 52);
    CHECK(r->q == 74);
    CHECK(r->delta == 22);

    // 255 = 15*17 sits in the delta=2 od2 zone that starts at the series head.
    r = factor_zone0(255);
    REQUIRE(r);
    CHECK(r->p == 15);
    CHECK(r->q == 17);
    CHECK(r->delta == 2);

    // A number in no base zone misses.
    CHECK_FALSE(factor_zone0(BigInt("1000003") * BigInt("10000019")));
}

TEST_CASE("factor_zone0 never recovers a delta whose zone starts later") {
    // Below both base-config switchovers the generating delta is not
    // recoverable; a hit, if any, must come from another zone the same n
    // genuinely sits in.
    for (long long delta : {28, 44, 102, 206}) {
        for (Parity parity : {Parity::odd, Parity::even}) {
            const BigInt zm_first = first_p_at_ssv(delta, DialPair{0, -1, 2, 2}, parity);
            const BigInt mz_first = first_p_at_ssv(delta, DialPair{-1, 0, 2, 2}, parity);
            const BigInt p = (zm_first < mz_first ? zm_first : mz_first) - 2;
            if (p < 1)
                continue;
            const BigInt n = p * (p + delta);
            if (auto r = factor_zone0(n)) {
                CHECK(r->p * r->q == n);
                CHECK(r->delta != delta);
            }
        }
    }
}

TEST_CASE("factor_zone0 keeps a constant step count") {
    std::int64_t steps = -1;
    for (BigInt n : {BigInt(405), BigInt(3848), BigInt(255), BigInt(3723), BigInt(3600)}) {
        auto r = factor_zone0(n);
        REQUIRE(r);
        if (steps < 0)
            steps = r->steps;
        CHECK(r->steps == steps);
    }
}

TEST_CASE("factor_scan walks the schedule in order") {
    auto out = factor_scan(3723, ScanSchedule::standard({2, 6}), 100);
    REQUIRE(out.result);
    CHECK(out.result->p == 51);
    CHECK(out.result->q == 73);
    CHECK(out.result->delta == 22);

    // 455 is out of every v=2 zone but inside the shifted v=6 od4 zone.
    out = factor_scan(455, ScanSchedule::standard({2, 6}), 100);
    REQUIRE(out.result);
    CHECK(out.result->p == 13);
    CHECK(out.result->q == 35);
    CHECK(out.result->delta == 22);
    CHECK(out.result->steps > 4); // found past the v=2 block

    // 725 = 25*29 sits in the delta=4 od4 zone; one step suffices.
    out = factor_scan(725, ScanSchedule{{{Deck::od4, DialPair{0, -1, 2, 2}}}}, 1);
    REQUIRE(out.result);
    CHECK(out.result->p == 25);
    CHECK(out.result->q == 29);
    CHECK(out.result->delta == 4);
    CHECK(out.steps_consumed == 1);

    // Budget exhaustion reports the steps consumed and no result.
    out = factor_scan(BigInt("1000003") * BigInt("10000019"), ScanSchedule::standard({2}), 2);
    CHECK_FALSE(out.result);
    CHECK(out.steps_consumed == 2);
    CHECK_THROWS_AS(factor_scan(15, ScanSchedule::standard(), 0), std::invalid_argument);
}

TEST_CASE("od_connect_step reproduces the worked neighbor") {
    const auto step = od_connect_step(BigInt("219781"), DialPair{0, -1, 2, 2});
    CHECK(step.n_next == 221949);
    CHECK(step.d1_next == 470);
    CHECK(step.od1_next == -1049);
    CHECK(step.od2_next == 835);
    CHECK(step.od3_next == 1884);
    CHECK(step.od4_next == -214);
    CHECK(step.df4_next == 576);
    // ... and the neighbor factors easily, handing back the delta for n.
    // 221949 = 3 * 73983 = 273 * 813, delta 540.
    CHECK(BigInt(273) * 813 == step.n_next);
    auto r = quadratic_factor(BigInt("219781"), 540);
    REQUIRE(r);
    CHECK(r->p == 271);
    CHECK(r->q == 811);
}

TEST_CASE("od_connect_step aborts when the relations do not apply") {
    // In zone 0 the od4 relation no longer matches the df pattern; the
    // prediction fails its own dial-resolution check.
    CHECK_THROWS_AS(od_connect_step(405, DialPair{0, -1, 2, 2}), SteppingError);
}

TEST_CASE("neighbor ranges bracket the true same-delta neighbors") {
    const auto ranges = neighbor_ranges(1643, DialPair{-1, 0, 2, 2});
    REQUIRE(ranges.size() == 2);
    CHECK(ranges[0].which == NeighborRange::Which::prev);
    CHECK(ranges[0].lo == 1347);
    CHECK(ranges[0].hi == 1491);
    CHECK(ranges[1].which == NeighborRange::Which::next);
    CHECK(ranges[1].lo == 1803);
    CHECK(ranges[1].hi == 1971);
    // true neighbors on the delta=22 series
    CHECK((1479 >= ranges[0].lo && 1479 <= ranges[0].hi));
    CHECK((1815 >= ranges[1].lo && 1815 <= ranges[1].hi));
    // head-of-series degenerate case still computes
    const auto head = neighbor_ranges(13, DialPair{0, -1, 2, 2});
    CHECK(head[0].lo <= head[0].hi);
}

TEST_CASE("neighbor ranges hold along whole series where d1 is locally linear") {
    int checked = 0;
    for (long long delta : {22, 46, 102, 134, 198}) {
        SeriesSpec spec = SeriesSpec::delta_series(delta, Parity::odd, DialPair{-1, 0, 2, 2});
        const auto rows = generate(spec, GenLimit::rows(80));
        for (size_t i = 1; i + 1 < rows.size(); ++i) {
            // The ranges assume d1 advances by 2 per row; rows breaking that
            // assumption (switchover points) are exactly the excluded ones.
            if (rows[i].d1 != rows[i - 1].d1 + 2 || rows[i + 1].d1 != rows[i].d1 + 2)
                continue;
            const auto ranges = neighbor_ranges(rows[i].n, DialPair{-1, 0, 2, 2});
            CHECK((rows[i - 1].n >= ranges[0].lo && rows[i - 1].n <= ranges[0].hi));
            CHECK((rows[i + 1].n >= ranges[1].lo && rows[i + 1].n <= ranges[1].hi));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("reflection marks on the reference series") {
    SUBCASE("delta 22: gap-0 reflection at ids 10/11") {
        SeriesSpec spec = SeriesSpec::delta_series(22, Parity::odd, DialPair{-1, 0, 2, 2});
        const auto rows = generate(spec, GenLimit::rows(16));
        const auto marks = reflection_scan(rows);
        REQUIRE(marks.size() == 1);
        CHECK(marks[0].x == 4);
        CHECK(marks[0].y == 4);
        CHECK(marks[0].gap == 0);
        CHECK(marks[0].center_lo == 10);
        CHECK(marks[0].center_hi == 11);
        CHECK(marks[0].span == 4); // 12, 20, 28, 36 on both sides
    }
    SUBCASE("delta 20: gap-2 reflection at ids 8/9") {
        SeriesSpec spec = SeriesSpec::delta_series(20, Parity::odd, DialPair{0, -1, 2, 2});
        const auto rows = generate(spec, GenLimit::rows(13));
        const auto marks = reflection_scan(rows);
        REQUIRE(marks.size() == 1);
        CHECK(marks[0].x == 3);
        CHECK(marks[0].y == 5);
        CHECK(marks[0].gap == 2);
        CHECK(marks[0].center_lo == 8);
        CHECK(marks[0].center_hi == 9);
        CHECK(marks[0].span == 3);
    }
    SUBCASE("mirrored pairs differ by exactly the gap") {
        for (long long delta : {20, 22, 28, 36}) {
            SeriesSpec spec = SeriesSpec::delta_series(
                delta, Parity::odd,
                delta % 4 == 0 ? DialPair{0, -1, 2, 2} : DialPair{-1, 0, 2, 2});
            const auto rows = generate(spec, GenLimit::rows(40));
            for (const auto &m : reflection_scan(rows)) {
                for (std::int64_t k = 1; k <= m.span; ++k) {
                    const auto &left = rows[static_cast<size_t>(m.center_lo - 1 - k)];
                    const auto &right = rows[static_cast<size_t>(m.center_hi - 1 + k)];
                    CHECK(abs(*right.od_of(Deck::od6) - *left.od_of(Deck::od6)) == m.gap);
                }
            }
        }
    }
    SUBCASE("strictly monotone od6 yields nothing") {
        std::vector<SeriesRow> rows;
        for (int i = 0; i < 12; ++i) {
            SeriesRow r;
            r.id = i + 1;
            r.od[static_cast<int>(Deck::od6) - 1] = 5 + 3 * i;
            rows.push_back(r);
        }
        CHECK(reflection_scan(rows).empty());
    }
}

TEST_CASE("od6 search finds the mirrored partners") {
    // 455 (id 7) and 1323 (id 14) share od6 = 28 on the delta=22 series.
    auto hits = od6_search(455, DialPair{-1, 0, 2, 2}, 28, SearchDirection::both, 600);
    bool found = false;
    for (const auto &c : hits) {
        if (c.m == 1323) {
            found = true;
            REQUIRE(c.delta_of_m);
            CHECK(*c.delta_of_m == 22);
        }
    }
    CHECK(found);

    // 363 (id 6) mirrors 1479 (id 15) at od6 = 36.
    hits = od6_search(363, DialPair{-1, 0, 2, 2}, 36, SearchDirection::up, 600);
    found = false;
    for (const auto &c : hits)
        if (c.m == 1479 && c.delta_of_m && *c.delta_of_m == 22)
            found = true;
    CHECK(found);

    CHECK(od6_search(455, DialPair{-1, 0, 2, 2}, 28, SearchDirection::both, 0).empty());
}

TEST_CASE("inter-delta verification reproduces the cross-reference rows") {
    const DialPair dials{0, -1, 8, 8};
    const struct {
        long long n;
        const char *deck;
        long long value;
        long long delta;
    } cases[3] = {
        {441383, "od2", 10201, 202},
        {785539, "od4", 13154, 162},
        {936863, "od5", 31732, 178},
    };
    for (const auto &c : cases) {
        auto rec = inter_delta_verify(122, 93, dials, c.n);
        CHECK(rec.known_ok);
        CHECK(deck_name(rec.known_deck) == "od2");
        CHECK(rec.known_value == 3721);
        REQUIRE(!rec.unknown_hits.empty());
        const auto &hit = rec.unknown_hits.front();
        CHECK(deck_name(hit.deck) == c.deck);
        CHECK(hit.sieve_value == c.value);
        CHECK(hit.delta == c.delta);
        CHECK(hit.p * hit.q == c.n);
    }
}

TEST_CASE("every factor result satisfies p*q = n") {
    std::mt19937_64 rng(5150);
    for (int rep = 0; rep < 400; ++rep) {
        const BigInt p = 2 * (rng() % 500) + 1;
        const BigInt q = p + 2 * (rng() % 300);
        const BigInt n = p * q;
        if (auto r = factor_zone0(n))
            CHECK(r->p * r->q == n);
        if (auto out = factor_scan(n, ScanSchedule::standard({2, 6}), 50); out.result)
            CHECK(out.result->p * out.result->q == n);
    }
}
