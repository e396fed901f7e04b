#include "deltasieve/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltasieve {

std::optional<FactorResult> quadratic_factor(const BigInt &n, const BigInt &delta) {
    if (n < 1 || delta < 0)
        return std::nullopt;
    const BigInt disc = delta * delta + 4 * n;
    auto s = exact_sqrt(disc);
    if (!s || mod_floor(*s, 2) != mod_floor(delta, 2))
        return std::nullopt;
    const BigInt p = (*s - delta) / 2;
    if (p < 1)
        return std::nullopt;
    return FactorResult{p, p + delta, delta, "quadratic", 0};
}

namespace {

struct DeckProbe {
    Deck deck;
    DialPair dials;
    BigInt value;
};

BigInt deck_value(const BigInt &n, const DialPair &dials, Deck deck) {
    const ResolvedDials r = resolve_dials(n, dials);
    const BigInt od1 = r.d1 * r.d1 - n;
    const BigInt od2 = r.d2 * r.d2 - n;
    switch (deck) {
    case Deck::od1: return od1;
    case Deck::od2: return od2;
    case Deck::od3: return od2 - od1;
    case Deck::od4: return od1 + od2;
    case Deck::od5: return od1 + 3 * od2;
    default: throw std::invalid_argument("deck_value: " + deck_name(deck) + " unsupported here");
    }
}

std::vector<std::string> families_for(Deck deck, const DialPair &dials, long long v) {
    std::vector<std::string> ids;
    const bool zm = dials.a1 == 0 && dials.a2 == -1;
    const bool mz = dials.a1 == -1 && dials.a2 == 0;
    if (deck == Deck::od4) {
        if (v == 2) {
            if (zm)
                ids = {"od4.base.on", "od4.base.en"};
            else if (mz)
                ids = {"od4.base.no", "od4.base.ne"};
        } else if (v > 2) {
            const std::string s = "od4.v" + std::to_string(v);
            if (zm)
                ids = {s + ".on", s + ".en"};
            else if (mz)
                ids = {s + ".no", s + ".ne"};
        }
    } else if (deck == Deck::od2 && v == 2) {
        if (zm)
            ids = {"od2.sq.on", "od2.sq.en"};
        else if (mz)
            ids = {"od2.sq.no", "od2.sq.ne"};
    } else if (deck == Deck::od5 && v >= 4) {
        const std::string s = "od5.v" + std::to_string(v);
        if (dials.a1 == -2 && dials.a2 == -1)
            ids = {s + ".on", s + ".en"};
        else if (dials.a1 == -1 && dials.a2 == -2)
            ids = {s + ".no", s + ".ne"};
    }
    return ids;
}

} // namespace

std::optional<FactorResult> factor_zone0(const BigInt &n, const FormRegistry &reg) {
    if (n < 1)
        return std::nullopt;
    const DialPair zm{0, -1, 2, 2};
    const DialPair mz{-1, 0, 2, 2};
    // Fixed probe order; all four candidates are evaluated so the operation
    // count does not depend on n or its delta.
    const DeckProbe probes[4] = {
        {Deck::od4, zm, deck_value(n, zm, Deck::od4)},
        {Deck::od4, mz, deck_value(n, mz, Deck::od4)},
        {Deck::od2, zm, deck_value(n, zm, Deck::od2)},
        {Deck::od2, mz, deck_value(n, mz, Deck::od2)},
    };

    std::int64_t steps = 0;
    std::optional<FactorResult> found;
    for (const DeckProbe &probe : probes) {
        ++steps;
        for (const BigInt &cand :
             invert_ssv(probe.deck, probe.value, families_for(probe.deck, probe.dials, 2), reg)) {
            if (found)
                continue;
            if (auto hit = quadratic_factor(n, cand)) {
                hit->method = "zone0";
                found = hit;
            }
        }
    }
    if (found)
        found->steps = steps;
    return found;
}

ScanSchedule ScanSchedule::standard(const std::vector<long long> &v_schedule) {
    ScanSchedule s;
    for (long long v : v_schedule) {
        if (v == 2) {
            s.steps.push_back({Deck::od4, DialPair{0, -1, 2, 2}});
            s.steps.push_back({Deck::od4, DialPair{-1, 0, 2, 2}});
            s.steps.push_back({Deck::od2, DialPair{0, -1, 2, 2}});
            s.steps.push_back({Deck::od2, DialPair{-1, 0, 2, 2}});
        } else if ((v - 2) % 4 == 0) {
            s.steps.push_back({Deck::od4, DialPair{0, -1, v, v}});
            s.steps.push_back({Deck::od4, DialPair{-1, 0, v, v}});
        }
        if (v >= 4 && (v - 4) % 8 == 0) {
            s.steps.push_back({Deck::od5, DialPair{-2, -1, v, v}});
            s.steps.push_back({Deck::od5, DialPair{-1, -2, v, v}});
        }
    }
    return s;
}

ScanOutcome factor_scan(const BigInt &n, const ScanSchedule &schedule, std::int64_t budget,
                        const FormRegistry &reg) {
    if (budget < 1)
        throw std::invalid_argument("factor_scan: budget must be >= 1");
    ScanOutcome out;
    for (const ScanStep &step : schedule.steps) {
        if (out.steps_consumed >= budget)
            break;
        ++out.steps_consumed;
        const BigInt value = deck_value(n, step.dials, step.deck);
        const long long v = step.dials.v1 == step.dials.v2 ? step.dials.v1 : 0;
        for (const BigInt &cand :
             invert_ssv(step.deck, value, families_for(step.deck, step.dials, v), reg)) {
            if (auto hit = quadratic_factor(n, cand)) {
                hit->method = "scan";
                hit->steps = out.steps_consumed;
                out.result = hit;
                return out;
            }
        }
    }
    return out;
}

OdConnectStep od_connect_step(const BigInt &n, const DialPair &dials) {
    if (n < 1)
        throw std::invalid_argument("od_connect_step: n must be positive");
    const ResolvedDials r = resolve_dials(n, dials);
    const BigInt od1 = r.d1 * r.d1 - n;
    const BigInt od2 = r.d2 * r.d2 - n;
    const BigInt od3 = od2 - od1;
    const BigInt od4 = od1 + od2;

    // Connect relations: od3 steps by +8 when d1 advances by 2, and
    // (od3/4 - df4') * 2 = od4' pins the next row's od4.
    if (mod_floor(od3, 4) != 0)
        throw SteppingError("od3 not divisible by 4; connect relation does not apply");
    OdConnectStep step;
    step.df4_next = od3 / 2 - od4;
    step.od4_next = od4 - step.df4_next;
    step.od3_next = od3 + 8;
    if (mod_floor(step.od4_next - step.od3_next, 2) != 0)
        throw SteppingError("od1'/od2' not integral; connect relation does not apply");
    step.od1_next = (step.od4_next - step.od3_next) / 2;
    step.od2_next = (step.od4_next + step.od3_next) / 2;
    step.d1_next = r.d1 + 2;
    step.n_next = step.d1_next * step.d1_next - step.od1_next;

    if (step.n_next <= n)
        throw SteppingError("predicted neighbor does not advance");
    const ResolvedDials check = resolve_dials(step.n_next, dials);
    if (check.d1 != step.d1_next)
        throw SteppingError("d1 did not advance linearly (switchover crossed)");
    if (check.d2 * check.d2 - step.n_next != step.od2_next)
        throw SteppingError("od2 mismatch at predicted neighbor");
    return step;
}

std::vector<NeighborRange> neighbor_ranges(const BigInt &n, const DialPair &dials) {
    const ResolvedDials r = resolve_dials(n, dials);
    const BigInt od1 = r.d1 * r.d1 - n;
    const BigInt d = r.d1;
    auto bounds = [&](const BigInt &a, const BigInt &b, NeighborRange::Which which) {
        // Tiny d flips the endpoint order at the series head.
        return a <= b ? NeighborRange{which, a, b} : NeighborRange{which, b, a};
    };
    std::vector<NeighborRange> out;
    out.push_back(bounds((d - 4) * (d - 4) - od1, (d - 2) * (d - 2) - od1,
                         NeighborRange::Which::prev));
    out.push_back(bounds((d + 2) * (d + 2) - od1, (d + 4) * (d + 4) - od1,
                         NeighborRange::Which::next));
    return out;
}

std::vector<ReflectionMark> reflection_scan(std::span<const SeriesRow> rows,
                                            std::int64_t min_span) {
    std::vector<ReflectionMark> marks;
    if (rows.size() < 4)
        return marks;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        const auto &lo = rows[i].od_of(Deck::od6);
        const auto &hi = rows[i + 1].od_of(Deck::od6);
        if (!lo || !hi)
            continue;
        const BigInt step = *hi - *lo;
        std::int64_t span = 0;
        while (true) {
            const std::int64_t k = span + 1;
            if (static_cast<std::int64_t>(i) - k < 0 ||
                i + 1 + static_cast<size_t>(k) >= rows.size())
                break;
            const auto &left = rows[i - static_cast<size_t>(k)].od_of(Deck::od6);
            const auto &right = rows[i + 1 + static_cast<size_t>(k)].od_of(Deck::od6);
            if (!left || !right || *right - *left != step)
                break;
            span = k;
        }
        if (span >= min_span) {
            // A constant run mirrors trivially; a real reflection has flanks
            // that move away from the convergence pair.
            const auto &flank = rows[i - 1].od_of(Deck::od6);
            if (flank && *flank == *lo && step == 0)
                continue;
            ReflectionMark mark;
            mark.x = *lo;
            mark.y = *hi;
            mark.gap = abs(step);
            mark.center_lo = rows[i].id;
            mark.center_hi = rows[i + 1].id;
            mark.span = span;
            marks.push_back(std::move(mark));
        }
    }
    return marks;
}

namespace {

/// Delta of the most balanced factor pair, by trial division up to bound.
std::optional<BigInt> balanced_delta(const BigInt &m, const BigInt &bound) {
    if (m < 1)
        return std::nullopt;
    const BigInt root = isqrt_floor(m);
    BigInt a = root;
    const BigInt lowest = root > bound ? root - bound : BigInt(1);
    for (; a >= lowest; --a) {
        if (a == 0)
            break;
        if (m % a == 0)
            return m / a - a;
    }
    return std::nullopt;
}

} // namespace

std::vector<Od6Candidate> od6_search(const BigInt &n, const DialPair &dials, const BigInt &target,
                                     SearchDirection direction, std::int64_t budget,
                                     const BigInt &factor_bound) {
    std::vector<Od6Candidate> out;
    if (budget < 1)
        return out;

    auto od6_of = [&](const BigInt &m) -> std::optional<BigInt> {
        const ResolvedDials r = resolve_dials(m, dials);
        const BigInt od1 = r.d1 * r.d1 - m;
        const BigInt od2 = r.d2 * r.d2 - m;
        return exact_sqrt(m * BigInt(r.applied_v) * r.applied_v + od1 * od2);
    };

    auto walk = [&](int sign) {
        BigInt m = n;
        for (std::int64_t i = 0; i < budget; ++i) {
            m += 2 * sign;
            if (m < 1)
                return;
            if (auto od6 = od6_of(m); od6 && *od6 == target)
                out.push_back(Od6Candidate{m, *od6, balanced_delta(m, factor_bound)});
        }
    };
    if (direction == SearchDirection::up || direction == SearchDirection::both)
        walk(+1);
    if (direction == SearchDirection::down || direction == SearchDirection::both)
        walk(-1);
    std::sort(out.begin(), out.end(),
              [](const Od6Candidate &a, const Od6Candidate &b) { return a.m < b.m; });
    return out;
}

InterDeltaRecord inter_delta_verify(const BigInt &known_delta, std::int64_t id,
                                    const DialPair &dials, const BigInt &n_unknown, Parity parity,
                                    const FormRegistry &reg) {
    InterDeltaRecord rec;

    SeriesSpec spec = SeriesSpec::delta_series(known_delta, parity, dials);
    spec.decks = {Deck::od1, Deck::od2, Deck::od3, Deck::od4, Deck::od5};
    const std::vector<SeriesRow> rows = generate(spec, GenLimit::rows(id + 8));
    const long long v = dials.v1 == dials.v2 ? dials.v1 : 0;
    for (Deck deck : {Deck::od2, Deck::od4, Deck::od5, Deck::od1}) {
        ZoneScan scan = detect_zones(rows, ZoneCriterion::deck_only(deck), known_delta, v, reg);
        for (const auto &z : scan.zones) {
            if (z.id_start <= id && id <= z.id_end && z.form_id != "unregistered") {
                rec.known_ok = true;
                rec.known_deck = deck;
                rec.known_value = z.steady_value;
                break;
            }
        }
        if (rec.known_ok)
            break;
    }

    // The unknown composite lands in a deck's zone exactly when that deck's
    // value fits the v-shaped steady form for a delta passing the quadratic
    // check: od2 -> (delta/2)^2, od4 -> delta^2/2 + v^2/2, od5 -> delta^2 + 3v^2/4.
    auto shape_delta = [&](Deck deck, const BigInt &value) -> std::optional<BigInt> {
        const BigInt vv = BigInt(v) * v;
        BigInt delta_sq;
        if (deck == Deck::od2)
            delta_sq = 4 * value;
        else if (deck == Deck::od4)
            delta_sq = 2 * value - vv;
        else if (4 * value >= 3 * vv && mod_floor(4 * value - 3 * vv, 4) == 0)
            delta_sq = value - 3 * vv / 4;
        else
            return std::nullopt;
        if (delta_sq <= 0)
            return std::nullopt;
        return exact_sqrt(delta_sq);
    };
    for (Deck deck : {Deck::od2, Deck::od4, Deck::od5}) {
        const BigInt value = deck_value(n_unknown, dials, deck);
        if (auto cand = shape_delta(deck, value)) {
            if (auto hit = quadratic_factor(n_unknown, *cand)) {
                rec.unknown_hits.push_back(
                    InterDeltaRecord::Hit{deck, value, *cand, hit->p, hit->q});
            }
        }
    }
    return rec;
}

} // namespace deltasieve
