#pragma once

#include "deltasieve/steady_state.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace deltasieve {

/// Zero-sum criterion: a zone is a span where sum(a_i * df_i) = 0 while
/// `steady_deck` holds one value.
struct ZoneCriterion {
    std::vector<std::pair<Deck, long long>> terms;
    Deck steady_deck = Deck::od4;

    static ZoneCriterion df12_od4() { return {{{Deck::od1, 1}, {Deck::od2, 1}}, Deck::od4}; }
    static ZoneCriterion df1234_od5() {
        return {{{Deck::od1, 1}, {Deck::od2, 1}, {Deck::od3, 1}, {Deck::od4, 1}}, Deck::od5};
    }
    static ZoneCriterion deck_only(Deck d) { return {{{d, 1}}, d}; }
};

struct ZoneReport {
    Deck steady_deck = Deck::od4;
    int zone_index = 0;           // 0 = the zone that keeps running at the horizon
    std::int64_t id_start = 0;
    std::int64_t id_end = 0;      // inclusive; open zones report the last seen id
    bool open = true;             // still holding at the end of the row span
    BigInt steady_value;
    std::int64_t coverage = 0;
    std::string form_id;          // registered form label, or "unregistered"
};

struct SwitchoverMark {
    enum class Kind { zone, point };
    Kind kind = Kind::zone;
    std::int64_t id = 0;
    Deck deck = Deck::od4;
    BigInt df_anomaly; // nonzero criterion sum at a switchover zone, doubled df3 at a point
};

struct ZoneScan {
    std::vector<ZoneReport> zones;
    std::vector<SwitchoverMark> switchovers;
};

/// Detects maximal constancy spans of the criterion's steady deck across
/// contiguous rows; the first row of each span is its switchover zone when the
/// criterion sum is nonzero there. Zone indices follow the dial schedule when
/// the steady value matches a v-parameterized form, otherwise the terminal
/// open zone is 0 and bounded zones count up moving away from it.
/// `delta`/`v` give the series context for form annotation (v = 0 to skip).
ZoneScan detect_zones(std::span<const SeriesRow> rows, const ZoneCriterion &criterion,
                      const BigInt &delta = 0, long long v = 0,
                      const FormRegistry &reg = FormRegistry::standard());

/// Rows whose |df3| doubles the modal |df3| of the span (bolded switchover
/// points). Fewer than 3 rows yield nothing.
std::vector<SwitchoverMark> find_switchover_points(std::span<const SeriesRow> rows);

struct CoverageRow {
    std::string deck_label; // deck name, od9 split into od9a/od9b by value
    Deck deck;
    int zone_index = 0;
    std::int64_t id_start = 0;
    std::int64_t id_end = 0;
    bool open = false;
    std::int64_t coverage = 0;
    BigInt steady_value;
    std::string form_id;
};

struct CoverageReport {
    BigInt delta;
    Parity parity = Parity::odd;
    std::vector<CoverageRow> rows; // ordered by id_start
    std::int64_t horizon = 0;
    std::int64_t zoners = 0;   // rows inside at least one reported zone
    std::int64_t zoneless = 0; // horizon - zoners

    /// deck,zone_index,id_start,id_end,coverage,steady_value,form_id rows,
    /// then a `# zoners=.. zoneless=..` summary line.
    std::string to_csv() const;
};

/// Scans the delta series under the given dial pair(s) and reports every
/// zone of the requested decks, ordered by first row. Zones whose value
/// matches no registered form are annotated "unregistered", never dropped.
CoverageReport coverage_report(const BigInt &delta, Parity parity,
                               const std::vector<DialPair> &dials, const std::vector<Deck> &decks,
                               std::int64_t horizon,
                               const FormRegistry &reg = FormRegistry::standard());

/// Re-runs detection for each dial2 offset v (v1 = v2 = v) and maps v to the
/// zone carrying the v-parameterized steady value.
std::map<long long, ZoneReport> zone_shift_scan(const BigInt &delta, Parity parity,
                                                const DialPair &base, Deck deck,
                                                const std::vector<long long> &v_schedule,
                                                std::int64_t horizon = 4000,
                                                const FormRegistry &reg = FormRegistry::standard());

/// Bounded exhaustive search over criterion coefficients a_i in {-2..2} for
/// the first `deck_count` decks: returns coefficient vectors whose df-sum
/// vanishes on the window while the od-sum is a nonzero constant. A solution
/// is flagged trivial when the delta+4 series yields the same constant.
struct CriterionCandidate {
    std::vector<long long> coefficients; // a_1..a_deck_count
    BigInt od_sum;                       // constant value of sum(a_i od_i) on the window
    bool trivial = false;
};

std::vector<CriterionCandidate> search_zone_criteria(const BigInt &delta, Parity parity,
                                                     const DialPair &dials, int deck_count,
                                                     std::int64_t window_start,
                                                     std::int64_t window_len);

} // namespace deltasieve
