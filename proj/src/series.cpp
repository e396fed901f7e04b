#include "deltasieve/series.hpp"

#include <sstream>
#include <stdexcept>

namespace deltasieve {

std::string DialPair::str() const {
    std::ostringstream os;
    os << '{' << a1 << ',' << a2 << ',' << v1 << ',' << v2 << '}';
    return os.str();
}

DialPair parse_dials(const std::string &s) {
    std::vector<long long> vals;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        size_t pos = 0;
        long long v = std::stoll(cur, &pos);
        while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos])))
            ++pos;
        if (pos != cur.size())
            throw std::invalid_argument("dials: bad integer '" + cur + "'");
        vals.push_back(v);
    }
    if (vals.size() != 4)
        throw std::invalid_argument("dials: expected exactly four integers a1,a2,v1,v2");
    return DialPair{vals[0], vals[1], vals[2], vals[3]};
}

ResolvedDials resolve_dials(const BigInt &n, const DialPair &dials) {
    if (n < 0)
        throw std::domain_error("resolve_dials: negative n");
    const BigInt root = isqrt_floor(n);
    ResolvedDials r;
    r.applied_a = is_even(root) ? dials.a1 : dials.a2;
    r.d1 = root + r.applied_a;
    r.applied_v = is_even(r.d1) ? dials.v1 : dials.v2;
    r.d2 = r.d1 + r.applied_v;
    return r;
}

std::string deck_name(Deck d) {
    switch (d) {
    case Deck::od1: return "od1";
    case Deck::od2: return "od2";
    case Deck::od3: return "od3";
    case Deck::od4: return "od4";
    case Deck::od5: return "od5";
    case Deck::od6: return "od6";
    case Deck::od7: return "od7";
    case Deck::od8: return "od8";
    case Deck::od9: return "od9";
    case Deck::od10: return "od10";
    case Deck::od11: return "od11";
    }
    return "?";
}

std::optional<Deck> deck_from_name(const std::string &name) {
    for (int i = 1; i <= kDeckCount; ++i) {
        Deck d = static_cast<Deck>(i);
        if (deck_name(d) == name)
            return d;
    }
    return std::nullopt;
}

void SeriesSpec::validate() const {
    if (value <= 0)
        throw std::invalid_argument("series: value must be positive");
    if (dials.empty() || dials.size() > 2)
        throw std::invalid_argument("series: one or two dial pairs required");
    if (p_start != 0 && !matches_parity(p_start, p_parity))
        throw std::invalid_argument("series: p_start parity mismatch");
    if (dials.size() < 2) {
        for (Deck d : decks)
            if (static_cast<int>(d) >= static_cast<int>(Deck::od7))
                throw std::invalid_argument("series: " + deck_name(d) +
                                            " needs a second dial pair");
    }
}

SeriesSpec SeriesSpec::delta_series(BigInt delta, Parity parity, DialPair dials) {
    SeriesSpec s;
    s.kind = SeriesKind::delta;
    s.value = std::move(delta);
    s.p_parity = parity;
    s.dials = {dials};
    return s;
}

SeriesSpec SeriesSpec::sum_series(BigInt sum, Parity parity, DialPair dials) {
    SeriesSpec s;
    s.kind = SeriesKind::sum;
    s.value = std::move(sum);
    s.p_parity = parity;
    s.dials = {dials};
    return s;
}

namespace {

bool deck_requested(const SeriesSpec &spec, Deck d) {
    if (spec.decks.empty()) {
        if (static_cast<int>(d) <= static_cast<int>(Deck::od6))
            return true;
        return spec.dials.size() >= 2;
    }
    for (Deck want : spec.decks)
        if (want == d)
            return true;
    return false;
}

void set_deck(SeriesRow &row, Deck d, BigInt value) {
    row.od[static_cast<int>(d) - 1] = std::move(value);
}

} // namespace

SeriesRow compute_row(const SeriesSpec &spec, const BigInt &p, const SeriesRow *prev_row) {
    spec.validate();
    if (!matches_parity(p, spec.p_parity))
        throw std::invalid_argument("compute_row: p parity mismatch");
    if (spec.kind == SeriesKind::sum && p > spec.value)
        throw std::invalid_argument("compute_row: p exceeds sum");

    SeriesRow row;
    row.id = prev_row ? prev_row->id + 1 : 1;
    row.p = p;
    row.q = spec.kind == SeriesKind::delta ? p + spec.value : spec.value - p;
    row.n = row.p * row.q;
    row.isqrt_n = isqrt_floor(row.n);

    const ResolvedDials primary = resolve_dials(row.n, spec.dials[0]);
    row.d1 = primary.d1;
    row.d2 = primary.d2;
    row.applied_v = primary.applied_v;

    const BigInt od1 = row.d1 * row.d1 - row.n;
    const BigInt od2 = row.d2 * row.d2 - row.n;
    if (deck_requested(spec, Deck::od1))
        set_deck(row, Deck::od1, od1);
    if (deck_requested(spec, Deck::od2))
        set_deck(row, Deck::od2, od2);
    if (deck_requested(spec, Deck::od3))
        set_deck(row, Deck::od3, od2 - od1);
    if (deck_requested(spec, Deck::od4))
        set_deck(row, Deck::od4, od1 + od2);
    if (deck_requested(spec, Deck::od5))
        set_deck(row, Deck::od5, od1 + 3 * od2); // od1+od2+od3+od4 collapsed
    if (deck_requested(spec, Deck::od6)) {
        // od6^2 = n*v^2 + od1*od2 with the row's applied dial2 offset; reported
        // only when the radicand is a perfect square.
        const BigInt v = primary.applied_v;
        if (auto root = exact_sqrt(row.n * v * v + od1 * od2))
            set_deck(row, Deck::od6, *root);
    }

    if (spec.dials.size() >= 2) {
        const long long a3 = is_even(row.isqrt_n) ? spec.dials[1].a1 : spec.dials[1].a2;
        const BigInt d3 = row.isqrt_n + a3;
        const long long v3 = is_even(d3) ? spec.dials[1].v1 : spec.dials[1].v2;
        const BigInt d4 = d3 + v3;
        row.d3 = d3;
        row.d4 = d4;
        const BigInt od7 = d3 * d3 - row.n;
        const BigInt od8 = d4 * d4 - row.n;
        if (deck_requested(spec, Deck::od7))
            set_deck(row, Deck::od7, od7);
        if (deck_requested(spec, Deck::od8))
            set_deck(row, Deck::od8, od8);
        if (deck_requested(spec, Deck::od9))
            set_deck(row, Deck::od9, od2 + od8);
        if (deck_requested(spec, Deck::od10))
            set_deck(row, Deck::od10, od1 + od2 + od8);
        if (deck_requested(spec, Deck::od11))
            set_deck(row, Deck::od11, od2 + 2 * od8 + od1 + od2);
    }

    for (int i = 0; i < kDeckCount; ++i) {
        if (!row.od[i])
            continue;
        if (prev_row && prev_row->od[i])
            row.df[i] = *prev_row->od[i] - *row.od[i];
        else
            row.df[i] = BigInt(0);
    }
    return row;
}

void generate_each(const SeriesSpec &spec, const GenLimit &limit,
                   const std::function<bool(const SeriesRow &)> &fn) {
    spec.validate();
    if (limit.max_rows < 1)
        throw std::invalid_argument("generate: need at least one row");

    BigInt p = spec.p_start;
    if (p == 0)
        p = spec.p_parity == Parity::odd ? 1 : 2;

    SeriesRow prev;
    bool have_prev = false;
    int run = 0;
    std::optional<BigInt> run_value;

    for (std::int64_t i = 0; i < limit.max_rows; ++i, p += 2) {
        if (spec.kind == SeriesKind::sum && p > spec.value)
            break; // sum series exhausts at p = sum
        SeriesRow row = compute_row(spec, p, have_prev ? &prev : nullptr);
        if (!fn(row))
            return;
        if (limit.steady_deck) {
            const auto &cell = row.od_of(*limit.steady_deck);
            if (cell && run_value && *cell == *run_value) {
                if (++run >= limit.steady_runs)
                    return;
            } else {
                run = 1;
                run_value = cell;
            }
        }
        prev = std::move(row);
        have_prev = true;
    }
}

std::vector<SeriesRow> generate(const SeriesSpec &spec, const GenLimit &limit) {
    std::vector<SeriesRow> rows;
    if (limit.max_rows > 0 && !limit.steady_deck)
        rows.reserve(static_cast<size_t>(limit.max_rows));
    generate_each(spec, limit, [&](const SeriesRow &row) {
        rows.push_back(row);
        return true;
    });
    return rows;
}

std::string series_csv_header() {
    std::string h = "id,p,q,n,isqrt_n,d1,d2";
    for (int i = 1; i <= kDeckCount; ++i)
        h += ",od" + std::to_string(i);
    for (int i = 1; i <= kDeckCount; ++i)
        h += ",df" + std::to_string(i);
    return h;
}

std::string series_csv_row(const SeriesRow &row) {
    std::ostringstream os;
    os << row.id << ',' << row.p << ',' << row.q << ',' << row.n << ',' << row.isqrt_n << ','
       << row.d1 << ',' << row.d2;
    for (int i = 0; i < kDeckCount; ++i) {
        os << ',';
        if (row.od[i])
            os << *row.od[i];
    }
    for (int i = 0; i < kDeckCount; ++i) {
        os << ',';
        if (row.df[i])
            os << *row.df[i];
    }
    return os.str();
}

} // namespace deltasieve
