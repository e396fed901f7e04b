#include "deltasieve/zones.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace deltasieve {

namespace {

BigInt criterion_sum(const SeriesRow &row, const ZoneCriterion &criterion) {
    BigInt s = 0;
    for (const auto &[deck, coeff] : criterion.terms) {
        const auto &cell = row.df_of(deck);
        if (!cell)
            throw std::invalid_argument("zone criterion references unevaluated deck " +
                                        deck_name(deck));
        s += coeff * *cell;
    }
    return s;
}

/// Schedule position of a v-shifted family: od4 zones move one slot per +4 on
/// v starting at v=2, od5 zones one slot per +8 starting at v=4.
int family_zone_index(Deck deck, long long v) {
    if (deck == Deck::od4 && v >= 2 && (v - 2) % 4 == 0)
        return static_cast<int>((v - 2) / 4);
    if (deck == Deck::od5 && v >= 4 && (v - 4) % 8 == 0)
        return static_cast<int>((v - 4) / 8);
    return -1;
}

} // namespace

ZoneScan detect_zones(std::span<const SeriesRow> rows, const ZoneCriterion &criterion,
                      const BigInt &delta, long long v, const FormRegistry &reg) {
    ZoneScan scan;
    if (rows.empty())
        return scan;

    const Deck deck = criterion.steady_deck;
    struct Run {
        std::int64_t start_idx = 0;
        std::int64_t len = 0;
        BigInt value;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto &cell = rows[i].od_of(deck);
        if (!cell)
            throw std::invalid_argument("detect_zones: steady deck not evaluated");
        if (!runs.empty() && runs.back().value == *cell &&
            rows[i].id == rows[runs.back().start_idx].id + runs.back().len) {
            ++runs.back().len;
        } else {
            runs.push_back(Run{static_cast<std::int64_t>(i), 1, *cell});
        }
    }

    for (const Run &run : runs) {
        if (run.len < 2)
            continue;
        const SeriesRow &first = rows[run.start_idx];
        ZoneReport z;
        z.steady_deck = deck;
        z.id_start = first.id;
        z.id_end = first.id + run.len - 1;
        z.open = (run.start_idx + run.len == static_cast<std::int64_t>(rows.size()));
        z.steady_value = run.value;
        z.coverage = run.len;
        if (delta != 0) {
            const Parity parity = is_odd(first.p) ? Parity::odd : Parity::even;
            const SteadyStateForm *form = reg.match_value(deck, delta, v, run.value, parity);
            z.form_id = form ? form->id : "unregistered";
        } else {
            z.form_id = "unregistered";
        }
        scan.zones.push_back(std::move(z));

        BigInt anomaly = criterion_sum(first, criterion);
        if (anomaly != 0 && first.id > rows.front().id)
            scan.switchovers.push_back(
                SwitchoverMark{SwitchoverMark::Kind::zone, first.id, deck, anomaly});
    }

    // Zone numbering: the dial schedule position when the value pins it,
    // otherwise 0 for the open terminal zone counting up toward the head.
    const int schedule = family_zone_index(deck, v);
    bool schedule_applies = false;
    if (schedule >= 0 && delta != 0)
        for (auto &z : scan.zones)
            if (z.form_id != "unregistered" && !z.form_id.empty())
                schedule_applies = true;
    for (size_t i = 0; i < scan.zones.size(); ++i) {
        auto &z = scan.zones[i];
        if (schedule_applies && z.form_id != "unregistered")
            z.zone_index = schedule;
        else
            z.zone_index = static_cast<int>(scan.zones.size() - 1 - i);
    }
    return scan;
}

std::vector<SwitchoverMark> find_switchover_points(std::span<const SeriesRow> rows) {
    std::vector<SwitchoverMark> marks;
    if (rows.size() < 3)
        return marks;

    std::map<BigInt, std::int64_t> freq;
    for (const auto &row : rows) {
        const auto &cell = row.df_of(Deck::od3);
        if (!cell)
            throw std::invalid_argument("switchover points need df3");
        freq[abs(*cell)]++;
    }
    BigInt modal = 0;
    std::int64_t best = 0;
    for (const auto &[value, count] : freq) {
        if (value == 0)
            continue;
        if (count > best) {
            best = count;
            modal = value;
        }
    }
    if (modal == 0)
        return marks;

    const BigInt doubled = 2 * modal;
    for (const auto &row : rows) {
        const auto &cell = row.df_of(Deck::od3);
        if (cell && abs(*cell) == doubled)
            marks.push_back(SwitchoverMark{SwitchoverMark::Kind::point, row.id, Deck::od3, *cell});
    }
    return marks;
}

std::string CoverageReport::to_csv() const {
    std::ostringstream os;
    os << "deck,zone_index,id_start,id_end,coverage,steady_value,form_id\n";
    for (const auto &r : rows) {
        os << r.deck_label << ',' << r.zone_index << ',' << r.id_start << ',';
        if (r.open)
            os << "inf";
        else
            os << r.id_end;
        os << ',' << r.coverage << ',' << r.steady_value << ',' << r.form_id << '\n';
    }
    os << "# zoners=" << zoners << " zoneless=" << zoneless << '\n';
    return os.str();
}

CoverageReport coverage_report(const BigInt &delta, Parity parity,
                               const std::vector<DialPair> &dials, const std::vector<Deck> &decks,
                               std::int64_t horizon, const FormRegistry &reg) {
    SeriesSpec spec;
    spec.kind = SeriesKind::delta;
    spec.value = delta;
    spec.p_parity = parity;
    spec.dials = dials;
    spec.decks = decks;
    spec.validate();

    const std::vector<SeriesRow> rows = generate(spec, GenLimit::rows(horizon));

    CoverageReport rep;
    rep.delta = delta;
    rep.parity = parity;
    rep.horizon = horizon;

    const long long v = dials[0].v1 == dials[0].v2 ? dials[0].v1 : 0;
    for (Deck deck : decks) {
        ZoneScan scan = detect_zones(rows, ZoneCriterion::deck_only(deck), delta, v, reg);
        for (auto &z : scan.zones) {
            CoverageRow row;
            row.deck = deck;
            row.deck_label = deck_name(deck);
            if (deck == Deck::od9 && z.form_id == "od9a")
                row.deck_label = "od9a";
            if (deck == Deck::od9 && z.form_id == "od9b")
                row.deck_label = "od9b";
            row.zone_index = z.zone_index;
            row.id_start = z.id_start;
            row.id_end = z.id_end;
            row.open = z.open;
            row.coverage = z.coverage;
            row.steady_value = z.steady_value;
            row.form_id = z.form_id;
            rep.rows.push_back(std::move(row));
        }
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const CoverageRow &a, const CoverageRow &b) {
        if (a.id_start != b.id_start)
            return a.id_start < b.id_start;
        return static_cast<int>(a.deck) < static_cast<int>(b.deck);
    });

    // zoner/zoneless split: rows covered by at least one zone vs the rest.
    std::vector<char> covered(static_cast<size_t>(rows.size()), 0);
    for (const auto &row : rep.rows)
        for (std::int64_t id = row.id_start; id <= row.id_end; ++id)
            covered[static_cast<size_t>(id - 1)] = 1;
    for (char c : covered)
        rep.zoners += c;
    rep.zoneless = static_cast<std::int64_t>(rows.size()) - rep.zoners;
    return rep;
}

std::map<long long, ZoneReport> zone_shift_scan(const BigInt &delta, Parity parity,
                                                const DialPair &base, Deck deck,
                                                const std::vector<long long> &v_schedule,
                                                std::int64_t horizon, const FormRegistry &reg) {
    if (v_schedule.empty())
        throw std::invalid_argument("zone_shift_scan: empty schedule");
    std::map<long long, ZoneReport> out;
    for (long long v : v_schedule) {
        DialPair dials = base;
        dials.v1 = dials.v2 = v;
        SeriesSpec spec = SeriesSpec::delta_series(delta, parity, dials);
        spec.decks = {Deck::od1, Deck::od2, Deck::od3, Deck::od4, Deck::od5};
        const std::vector<SeriesRow> rows = generate(spec, GenLimit::rows(horizon));
        ZoneScan scan = detect_zones(rows, ZoneCriterion::deck_only(deck), delta, v, reg);
        // Keep the zone holding the v-parameterized value; fall back to the
        // longest span when no form matches.
        const ZoneReport *pick = nullptr;
        for (const auto &z : scan.zones)
            if (z.form_id != "unregistered" && (!pick || z.coverage > pick->coverage))
                pick = &z;
        if (!pick)
            for (const auto &z : scan.zones)
                if (!pick || z.coverage > pick->coverage)
                    pick = &z;
        if (pick)
            out[v] = *pick;
    }
    return out;
}

std::vector<CriterionCandidate> search_zone_criteria(const BigInt &delta, Parity parity,
                                                     const DialPair &dials, int deck_count,
                                                     std::int64_t window_start,
                                                     std::int64_t window_len) {
    if (deck_count < 1 || deck_count > 6)
        throw std::invalid_argument("criterion search covers 1..6 decks");
    if (window_len < 2)
        throw std::invalid_argument("criterion search needs a window of >= 2 rows");

    auto window_rows = [&](const BigInt &d) {
        SeriesSpec spec = SeriesSpec::delta_series(d, parity, dials);
        std::vector<SeriesRow> rows = generate(spec, GenLimit::rows(window_start + window_len));
        if (static_cast<std::int64_t>(rows.size()) < window_start + window_len)
            throw std::invalid_argument("criterion search window exceeds the series");
        rows.erase(rows.begin(), rows.begin() + (window_start - 1));
        return rows;
    };
    const std::vector<SeriesRow> rows = window_rows(delta);
    const std::vector<SeriesRow> companion = window_rows(delta + 4);

    auto od_sum_constant = [&](const std::vector<SeriesRow> &span,
                               const std::vector<long long> &a) -> std::optional<BigInt> {
        std::optional<BigInt> constant;
        for (const auto &row : span) {
            BigInt s = 0;
            for (int i = 0; i < deck_count; ++i)
                s += a[i] * *row.od[i];
            if (constant && *constant != s)
                return std::nullopt;
            constant = s;
        }
        return constant;
    };

    std::vector<CriterionCandidate> out;
    std::vector<long long> a(static_cast<size_t>(deck_count), -2);
    while (true) {
        bool all_zero = std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
        if (!all_zero) {
            bool df_zero = true;
            for (size_t r = 1; r < rows.size() && df_zero; ++r) {
                BigInt s = 0;
                for (int i = 0; i < deck_count; ++i)
                    s += a[i] * *rows[r].df[i];
                df_zero = s == 0;
            }
            if (df_zero) {
                if (auto value = od_sum_constant(rows, a); value && *value != 0) {
                    CriterionCandidate cand;
                    cand.coefficients = a;
                    cand.od_sum = *value;
                    auto companion_value = od_sum_constant(companion, a);
                    cand.trivial = companion_value && *companion_value == *value;
                    out.push_back(std::move(cand));
                }
            }
        }
        int i = 0;
        for (; i < deck_count; ++i) {
            if (a[i] < 2) {
                ++a[i];
                break;
            }
            a[i] = -2;
        }
        if (i == deck_count)
            break;
    }
    return out;
}

} // namespace deltasieve
