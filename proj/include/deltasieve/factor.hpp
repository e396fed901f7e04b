#pragma once

#include "deltasieve/zones.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltasieve {

struct FactorResult {
    BigInt p, q;    // p <= q, p*q = n
    BigInt delta;   // q - p
    std::string method; // quadratic | zone0 | od_connect | range | reflection | equilibrium
    std::int64_t steps = 0;
};

/// Roots of p^2 + p*delta - n = 0: succeeds exactly when delta^2 + 4n is a
/// perfect square of delta's parity. A miss returns nothing.
std::optional<FactorResult> quadratic_factor(const BigInt &n, const BigInt &delta);

/// Zone-0 recovery: evaluates od2/od4 of n under both base dial configs,
/// inverts the registered steady forms and quadratic-checks each candidate.
/// Constant operation count; `steps` reports the candidate evaluations made.
std::optional<FactorResult> factor_zone0(const BigInt &n,
                                         const FormRegistry &reg = FormRegistry::standard());

/// One step of a scan schedule: a deck family evaluated at a dial setting.
struct ScanStep {
    Deck deck = Deck::od4;
    DialPair dials;
};

struct ScanSchedule {
    std::vector<ScanStep> steps;

    /// od4/od2 at v=2 plus od4/od5 shifted through the v offsets given.
    static ScanSchedule standard(const std::vector<long long> &v_schedule = {2, 6, 10});
};

struct ScanOutcome {
    std::optional<FactorResult> result;
    std::int64_t steps_consumed = 0;
};

/// Walks the schedule in order, inverting each deck family and quadratic
/// checking candidates; stops at the budget.
ScanOutcome factor_scan(const BigInt &n, const ScanSchedule &schedule, std::int64_t budget,
                        const FormRegistry &reg = FormRegistry::standard());

struct OdConnectStep {
    BigInt n_next;
    BigInt d1_next;
    BigInt od1_next, od2_next, od3_next, od4_next;
    BigInt df4_next;
};

struct SteppingError : std::runtime_error {
    explicit SteppingError(const std::string &what) : std::runtime_error(what) {}
};

/// Predicts the next same-delta composite from one row's deck values, assuming
/// d1 advances by 2 and the od3/od4 connect relations hold. Aborts with
/// SteppingError when the predicted number resolves inconsistently (a
/// switchover point was crossed or the relations do not apply at this row).
OdConnectStep od_connect_step(const BigInt &n, const DialPair &dials);

struct NeighborRange {
    enum class Which { prev, next };
    Which which = Which::prev;
    BigInt lo, hi; // inclusive
};

/// Ranges [(d-4)^2-od1, (d-2)^2-od1] and [(d+2)^2-od1, (d+4)^2-od1] that hold
/// the previous/next same-delta composite under the linear-d1 assumption.
std::vector<NeighborRange> neighbor_ranges(const BigInt &n, const DialPair &dials);

struct ReflectionMark {
    BigInt x, y;                 // the two convergence od6 values
    BigInt gap;                  // |x - y|
    std::int64_t center_lo = 0;  // adjacent row ids the reflection pivots on
    std::int64_t center_hi = 0;
    std::int64_t span = 0;       // mirrored pairs observed on each side
};

/// Pivots where od6 values mirror: od6(center_hi + k) - od6(center_lo - k)
/// stays equal to y - x for k = 1..span. Only spans >= min_span are reported.
std::vector<ReflectionMark> reflection_scan(std::span<const SeriesRow> rows, std::int64_t min_span = 3);

struct Od6Candidate {
    BigInt m;
    BigInt od6;
    std::optional<BigInt> delta_of_m; // delta of m's most balanced factor pair, when found
};

enum class SearchDirection { up, down, both };

/// Walks integers m of n's parity away from n, keeping those whose od6 under
/// the fixed dials equals `target`. Hits are factored by trial division up to
/// `factor_bound` to derive their delta.
std::vector<Od6Candidate> od6_search(const BigInt &n, const DialPair &dials, const BigInt &target,
                                     SearchDirection direction, std::int64_t budget,
                                     const BigInt &factor_bound = 1'000'000);

struct InterDeltaRecord {
    bool known_ok = false;          // known delta yields a zone containing `id`
    Deck known_deck = Deck::od2;
    BigInt known_value;
    struct Hit {
        Deck deck;
        BigInt sieve_value;
        BigInt delta;
        BigInt p, q;
    };
    std::vector<Hit> unknown_hits;  // decks whose steady form places n_unknown in a zone
};

/// Eq-style cross-delta verification: confirms the known delta's zone at `id`
/// under `dials` and reports which deck zones the unknown composite lands in.
InterDeltaRecord inter_delta_verify(const BigInt &known_delta, std::int64_t id,
                                    const DialPair &dials, const BigInt &n_unknown,
                                    Parity parity = Parity::odd,
                                    const FormRegistry &reg = FormRegistry::standard());

} // namespace deltasieve
