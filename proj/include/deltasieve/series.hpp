#pragma once

#include "deltasieve/bigint.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace deltasieve {

/// The four parity-selected offsets governing d1 and d2.
/// a1 applies when isqrt(n) is even, a2 when it is odd;
/// v1 applies when d1 is even, v2 when it is odd.
struct DialPair {
    long long a1 = 0;
    long long a2 = 0;
    long long v1 = 0;
    long long v2 = 0;

    bool operator==(const DialPair &) const = default;

    std::string str() const; // "{a1,a2,v1,v2}"
};

/// Parses "a1,a2,v1,v2" (exactly four integers).
DialPair parse_dials(const std::string &s);

struct ResolvedDials {
    BigInt d1;
    BigInt d2;
    long long applied_a = 0;
    long long applied_v = 0;
};

/// d1 = isqrt(n) + (a1 if isqrt(n) even else a2); d2 = d1 + (v1 if d1 even else v2).
ResolvedDials resolve_dials(const BigInt &n, const DialPair &dials);

enum class Deck : int {
    od1 = 1,
    od2,
    od3,
    od4,
    od5,
    od6,
    od7,
    od8,
    od9,
    od10,
    od11,
};

constexpr int kDeckCount = 11;

std::string deck_name(Deck d);
std::optional<Deck> deck_from_name(const std::string &name);

enum class SeriesKind { delta, sum };
enum class Parity { odd, even };

inline bool matches_parity(const BigInt &x, Parity p) {
    return p == Parity::odd ? is_odd(x) : is_even(x);
}

struct SeriesSpec {
    SeriesKind kind = SeriesKind::delta;
    BigInt value;                    // delta or sum
    Parity p_parity = Parity::odd;
    BigInt p_start;                  // defaults to 1 (odd) / 2 (even) when zero
    std::vector<DialPair> dials;     // one pair; a second defines d3/d4 and od7..od11
    std::vector<Deck> decks;         // decks to evaluate; empty = od1..od6 (plus od7..od11 with 2 pairs)

    void validate() const; // throws std::invalid_argument on a bad configuration

    static SeriesSpec delta_series(BigInt delta, Parity parity, DialPair dials);
    static SeriesSpec sum_series(BigInt sum, Parity parity, DialPair dials);
};

/// One row of a delta- or sum-series. Deck cells are optional: a deck that was
/// not requested (or od7..od11 without a second dial pair) stays empty, and an
/// od6 whose radicand is negative or not a perfect square is flagged empty
/// rather than approximated.
struct SeriesRow {
    std::int64_t id = 0;
    BigInt p, q, n;
    BigInt isqrt_n;
    BigInt d1, d2;
    std::optional<BigInt> d3, d4;
    long long applied_v = 0; // dial2 offset actually used for this row
    std::array<std::optional<BigInt>, kDeckCount> od{};
    std::array<std::optional<BigInt>, kDeckCount> df{};

    const std::optional<BigInt> &od_of(Deck d) const { return od[static_cast<int>(d) - 1]; }
    const std::optional<BigInt> &df_of(Deck d) const { return df[static_cast<int>(d) - 1]; }
};

/// Computes a single row; df values chain against prev_row (0 when absent).
SeriesRow compute_row(const SeriesSpec &spec, const BigInt &p, const SeriesRow *prev_row = nullptr);

/// Stop condition for generate(): a hard row cap, optionally ending earlier
/// once `steady_deck` holds the same value for `steady_runs` consecutive rows.
struct GenLimit {
    std::int64_t max_rows = 0;
    std::optional<Deck> steady_deck;
    int steady_runs = 3;

    static GenLimit rows(std::int64_t n) { return GenLimit{n, std::nullopt, 3}; }
    static GenLimit steady(Deck deck, int runs = 3, std::int64_t cap = 1'000'000) {
        return GenLimit{cap, deck, runs};
    }
};

/// Rows in ascending id with p advancing by 2. A sum series exhausts at p = sum;
/// asking for more rows yields a truncated sequence, not an error.
std::vector<SeriesRow> generate(const SeriesSpec &spec, const GenLimit &limit);

/// Streaming variant; the callback returns false to stop early.
void generate_each(const SeriesSpec &spec, const GenLimit &limit,
                   const std::function<bool(const SeriesRow &)> &fn);

/// CSV emission per the series interface:
/// id,p,q,n,isqrt_n,d1,d2,od1,...,od11,df1,...,df11 with empty cells for
/// unevaluated decks.
std::string series_csv_header();
std::string series_csv_row(const SeriesRow &row);

} // namespace deltasieve
