#include "deltasieve/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace deltasieve {

namespace {

DialPair delta_dials_for(const BigInt &delta, Parity parity) {
    const bool mod4_0 = mod_floor(delta, 4) == 0;
    const bool odd_p = parity == Parity::odd;
    // The od4 zone-0 family for this class/parity.
    if (mod4_0 == odd_p)
        return DialPair{0, -1, 2, 2};
    return DialPair{-1, 0, 2, 2};
}

} // namespace

EquilibriumAnchor equilibrium_anchor(const BigInt &delta, Parity p_parity) {
    if (delta < 2 || is_odd(delta))
        throw std::invalid_argument("equilibrium_anchor: even delta required");

    EquilibriumAnchor a;
    a.delta = delta;
    a.parity = p_parity;
    a.delta_dials = delta_dials_for(delta, p_parity);
    a.sum_dials = DialPair{-1, 0, 2, 2};
    a.p_ssv = first_p_at_ssv(delta, a.delta_dials, p_parity);

    SeriesSpec spec = SeriesSpec::delta_series(delta, p_parity, a.delta_dials);
    spec.p_start = a.p_ssv;
    const SeriesRow row = compute_row(spec, a.p_ssv);
    if (!row.od_of(Deck::od6))
        throw std::logic_error("equilibrium_anchor: od6 undefined at the steady row");
    a.od6_ssv = *row.od_of(Deck::od6);

    const bool mod4_0 = mod_floor(delta, 4) == 0;
    const bool odd_p = p_parity == Parity::odd;
    a.n_anchor = (mod4_0 == odd_p) ? a.od6_ssv : a.od6_ssv + 1;
    return a;
}

std::vector<EquilibriumRow> equilibrium_table(const BigInt &delta, Parity p_parity,
                                              std::int64_t length) {
    const EquilibriumAnchor anchor = equilibrium_anchor(delta, p_parity);

    // The sum-series start is the larger root of x^2 - delta*x + N = 0; the
    // series keeps walking down past q = 0 (N goes negative).
    const BigInt disc = delta * delta - 4 * anchor.n_anchor;
    auto s = exact_sqrt(disc);
    if (!s)
        throw std::logic_error("equilibrium_table: anchor has no sum-series factor pair");
    const BigInt p_sum_start = (delta + *s) / 2;

    // Full length runs the delta side down to the series head.
    const BigInt head = p_parity == Parity::odd ? 1 : 2;
    const BigInt steps = (anchor.p_ssv - head) / 2 + 1;
    std::int64_t max_len = steps.convert_to<std::int64_t>();
    if (length <= 0 || length > max_len)
        length = max_len;

    SeriesSpec spec = SeriesSpec::delta_series(delta, p_parity, anchor.delta_dials);
    spec.decks = {Deck::od6};
    const std::vector<SeriesRow> rows =
        generate(spec, GenLimit::rows((anchor.p_ssv - head).convert_to<std::int64_t>() / 2 + 1));

    std::vector<EquilibriumRow> table;
    table.reserve(static_cast<size_t>(length));
    for (std::int64_t k = 0; k < length; ++k) {
        const BigInt p_sum = p_sum_start + 2 * k;
        const size_t delta_idx = rows.size() - 1 - static_cast<size_t>(k);
        const auto &od6 = rows[delta_idx].od_of(Deck::od6);
        if (!od6)
            throw std::logic_error("equilibrium_table: od6 undefined at id " +
                                   std::to_string(rows[delta_idx].id));
        EquilibriumRow r;
        r.n_sum = p_sum * (delta - p_sum);
        r.od6_delta = *od6;
        r.constant = r.n_sum - r.od6_delta;
        if (!table.empty())
            r.df = table.back().constant - r.constant;
        table.push_back(std::move(r));
    }
    return table;
}

std::vector<GecStats> gec_growth(const BigInt &delta_start, const BigInt &delta_end,
                                 Parity p_parity, GecMode mode) {
    if (mod_floor(delta_start, 4) != mod_floor(delta_end, 4))
        throw std::invalid_argument("gec_growth: endpoints must share the mod-4 class");
    std::vector<GecStats> out;
    if (delta_end <= delta_start)
        return out;

    std::vector<BigInt> prev;
    for (BigInt d = delta_start; d <= delta_end; d += 4) {
        std::vector<BigInt> constants;
        for (const auto &row : equilibrium_table(d, p_parity))
            constants.push_back(row.constant);
        if (!prev.empty()) {
            GecStats st;
            st.delta = d;
            st.total = static_cast<std::int64_t>(constants.size());
            if (mode == GecMode::positional) {
                const size_t overlap = std::min(prev.size(), constants.size());
                for (size_t i = 0; i < overlap; ++i)
                    if (prev[i] == constants[i])
                        ++st.gec;
            } else {
                std::map<BigInt, std::int64_t> bag;
                for (const auto &c : prev)
                    bag[c]++;
                for (const auto &c : constants)
                    if (auto it = bag.find(c); it != bag.end() && it->second > 0) {
                        --it->second;
                        ++st.gec;
                    }
            }
            st.nce = st.total - st.gec;
            st.residue = st.total - 2 * st.gec;
            out.push_back(st);
        }
        prev = std::move(constants);
    }
    return out;
}

std::optional<FactorResult> jump_factor(const BigInt &n, const DialPair &dials,
                                        const std::vector<BigInt> &constants,
                                        const BigInt &factor_bound) {
    if (constants.empty())
        throw std::invalid_argument("jump_factor: constants must be nonempty");
    const ResolvedDials r = resolve_dials(n, dials);
    const BigInt od1 = r.d1 * r.d1 - n;
    const BigInt od2 = r.d2 * r.d2 - n;
    const auto od6 = exact_sqrt(n * BigInt(r.applied_v) * r.applied_v + od1 * od2);
    if (!od6)
        return std::nullopt;

    for (const BigInt &c : constants) {
        const BigInt target = *od6 + c;
        if (target < 1)
            continue;
        // Every divisor pair of the jump target proposes a delta.
        const BigInt root = isqrt_floor(target);
        for (BigInt a = 1; a <= root && a <= factor_bound; ++a) {
            if (target % a != 0)
                continue;
            const BigInt cand = a + target / a;
            if (auto hit = quadratic_factor(n, cand)) {
                hit->method = "equilibrium";
                return hit;
            }
        }
    }
    return std::nullopt;
}

std::string equilibrium_csv(const std::vector<EquilibriumRow> &rows) {
    std::ostringstream os;
    os << "n_sum,od6_delta,constant,df\n";
    for (const auto &r : rows) {
        os << r.n_sum << ',' << r.od6_delta << ',' << r.constant << ',';
        if (r.df)
            os << *r.df;
        os << '\n';
    }
    return os.str();
}

std::string gec_csv(const std::vector<GecStats> &stats) {
    std::ostringstream os;
    os << "delta,gec,nce,residue\n";
    for (const auto &st : stats)
        os << st.delta << ',' << st.gec << ',' << st.nce << ',' << st.residue << '\n';
    return os.str();
}

} // namespace deltasieve
