#include "deltasieve/golden.hpp"
#include "deltasieve/zones.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace deltasieve {

namespace {

TableEntry series_entry(int number, TableLayout layout, SeriesKind kind, long long value,
                        Parity parity, DialPair dials, std::int64_t rows,
                        std::optional<DialPair> dials2 = std::nullopt) {
    TableEntry e;
    e.number = number;
    e.layout = layout;
    e.kind = kind;
    e.value = value;
    e.parity = parity;
    e.dials = dials;
    e.dials2 = dials2;
    e.rows = rows;
    return e;
}

TableEntry coverage_entry(int number, long long delta, Parity parity, DialPair dials,
                          std::int64_t horizon, std::optional<DialPair> dials2 = std::nullopt) {
    TableEntry e;
    e.number = number;
    e.layout = TableLayout::coverage;
    e.kind = SeriesKind::delta;
    e.value = delta;
    e.parity = parity;
    e.dials = dials;
    e.dials2 = dials2;
    e.horizon = horizon;
    return e;
}

TableEntry equilibrium_entry(int number, long long delta, std::int64_t rows) {
    TableEntry e;
    e.number = number;
    e.layout = TableLayout::equilibrium;
    e.value = delta;
    e.parity = Parity::odd;
    e.rows = rows;
    return e;
}

std::vector<TableEntry> build_catalog() {
    const DialPair zm22{0, -1, 2, 2};
    const DialPair mz22{-1, 0, 2, 2};
    std::vector<TableEntry> t;
    using L = TableLayout;
    using K = SeriesKind;

    t.push_back(series_entry(1, L::base, K::delta, 12, Parity::odd, zm22, 8));
    t.push_back(series_entry(2, L::base, K::delta, 22, Parity::odd, zm22, 12));
    t.push_back(series_entry(3, L::base, K::delta, 12, Parity::even, zm22, 3));
    t.push_back(series_entry(4, L::base, K::delta, 16, Parity::even, zm22, 6));
    t.push_back(series_entry(5, L::base, K::delta, 22, Parity::even, zm22, 26));
    t.push_back(series_entry(6, L::base, K::delta, 24, Parity::odd, mz22, 14));
    t.push_back(series_entry(7, L::base, K::delta, 12, Parity::odd, mz22, 4));
    t.push_back(series_entry(8, L::base, K::delta, 22, Parity::odd, mz22, 27));
    t.push_back(series_entry(9, L::base, K::delta, 12, Parity::even, mz22, 8));
    t.push_back(series_entry(10, L::base, K::delta, 22, Parity::even, mz22, 12));
    t.push_back(series_entry(11, L::df_zone, K::delta, 12, Parity::odd, zm22, 14));
    t.push_back(series_entry(12, L::df_zone, K::delta, 22, Parity::even, zm22, 29));
    t.push_back(series_entry(13, L::df_zone, K::delta, 22, Parity::odd, mz22, 30));
    t.push_back(series_entry(14, L::df_zone, K::delta, 12, Parity::even, mz22, 11));
    t.push_back(series_entry(15, L::df_od5, K::delta, 46, Parity::odd, DialPair{-1, -2, 4, 4}, 60));
    t.push_back(series_entry(16, L::df_od5, K::delta, 48, Parity::odd, DialPair{-2, -1, 4, 4}, 65));
    t.push_back(series_entry(17, L::df_zone, K::delta, 22, Parity::odd, DialPair{-1, 0, 6, 6}, 27));
    t.push_back(
        series_entry(18, L::df_od5_zone, K::delta, 46, Parity::odd, DialPair{-1, -2, 12, 12}, 20));
    t.push_back(coverage_entry(19, 160, Parity::odd, DialPair{-2, 2, 12, 12}, 1700));
    t.push_back(coverage_entry(20, 480, Parity::odd, DialPair{-2, 2, 12, 12}, 14400));
    t.push_back(coverage_entry(21, 94, Parity::odd, DialPair{0, -1, 6, 6}, 700,
                               DialPair{-2, 1, 16, 16}));
    t.push_back(series_entry(22, L::df_zone, K::delta, 22, Parity::odd, DialPair{-1, 0, 6, 6}, 8));
    t.push_back(
        series_entry(23, L::od5_df5_zone, K::delta, 22, Parity::odd, DialPair{-1, 0, 4, 4}, 7));
    t.push_back(series_entry(24, L::df_zone, K::delta, 22, Parity::odd, DialPair{-1, 0, 6, 6}, 8));
    t.push_back(series_entry(25, L::connect, K::delta, 540, Parity::odd, zm22, 137));
    t.push_back(series_entry(26, L::base, K::delta, 22, Parity::odd, mz22, 20));
    t.push_back(series_entry(27, L::base, K::delta, 22, Parity::odd, mz22, 16));
    t.push_back(series_entry(28, L::base, K::delta, 20, Parity::odd, zm22, 13));
    {
        TableEntry e;
        e.number = 29;
        e.layout = L::interdelta;
        t.push_back(e);
    }
    t.push_back(series_entry(30, L::base, K::sum, 22, Parity::odd, mz22, 11));
    t.push_back(series_entry(31, L::base, K::sum, 20, Parity::odd, mz22, 10));
    t.push_back(series_entry(32, L::base, K::delta, 20, Parity::odd, zm22, 22));
    t.push_back(series_entry(33, L::base, K::sum, 20, Parity::odd, mz22, 10));
    t.push_back(equilibrium_entry(34, 20, 10));
    t.push_back(equilibrium_entry(35, 40, 10));
    t.push_back(series_entry(36, L::base, K::delta, 22, Parity::odd, mz22, 27));
    t.push_back(series_entry(37, L::base, K::sum, 22, Parity::odd, mz22, 11));
    t.push_back(equilibrium_entry(38, 22, 9));
    t.push_back(equilibrium_entry(39, 42, 9));
    t.push_back(series_entry(40, L::base, K::delta, 20, Parity::even, mz22, 23));
    t.push_back(series_entry(41, L::base, K::sum, 20, Parity::even, mz22, 10));
    t.push_back(series_entry(42, L::base, K::delta, 22, Parity::even, zm22, 27));
    t.push_back(series_entry(43, L::base, K::sum, 22, Parity::even, mz22, 11));
    t.push_back(series_entry(44, L::df_od5, K::delta, 23, Parity::odd, mz22, 20));
    t.push_back(series_entry(45, L::df_od5, K::delta, 25, Parity::odd, zm22, 23));
    t.push_back(series_entry(46, L::df_od5, K::delta, 25, Parity::even, mz22, 27));
    t.push_back(series_entry(47, L::df_od5, K::delta, 23, Parity::even, zm22, 27));
    return t;
}

std::string opt_str(const std::optional<BigInt> &v) { return v ? v->str() : std::string(); }

/// Maps row id -> zone index for the zone column layouts.
std::map<std::int64_t, int> zone_column(const std::vector<SeriesRow> &rows, Deck deck,
                                        const BigInt &delta, long long v) {
    std::map<std::int64_t, int> out;
    ZoneScan scan = detect_zones(rows, ZoneCriterion::deck_only(deck), delta, v);
    for (const auto &z : scan.zones)
        for (std::int64_t id = z.id_start; id <= z.id_end; ++id)
            out[id] = z.zone_index;
    return out;
}

std::string render_series_table(const TableEntry &e) {
    SeriesSpec spec;
    spec.kind = e.kind;
    spec.value = e.value;
    spec.p_parity = e.parity;
    spec.dials = {e.dials};
    if (e.dials2)
        spec.dials.push_back(*e.dials2);
    const std::vector<SeriesRow> rows = generate(spec, GenLimit::rows(e.rows));

    const long long v = e.dials.v1 == e.dials.v2 ? e.dials.v1 : 0;
    std::ostringstream os;
    switch (e.layout) {
    case TableLayout::base: {
        os << "id,p,q,n,isqrt_n,d1,d2,d1_sq,d2_sq,od1,od2,od3,od4,od6\n";
        for (const auto &r : rows) {
            os << r.id << ',' << r.p << ',' << r.q << ',' << r.n << ',' << r.isqrt_n << ','
               << r.d1 << ',' << r.d2 << ',' << r.d1 * r.d1 << ',' << r.d2 * r.d2 << ','
               << opt_str(r.od_of(Deck::od1)) << ',' << opt_str(r.od_of(Deck::od2)) << ','
               << opt_str(r.od_of(Deck::od3)) << ',' << opt_str(r.od_of(Deck::od4)) << ','
               << opt_str(r.od_of(Deck::od6)) << '\n';
        }
        break;
    }
    case TableLayout::df_zone: {
        const auto zones = zone_column(rows, Deck::od4, e.value, v);
        os << "id,p,q,n,od1,df1,od2,df2,od3,df3,od4,df4,zone\n";
        for (const auto &r : rows) {
            os << r.id << ',' << r.p << ',' << r.q << ',' << r.n << ','
               << opt_str(r.od_of(Deck::od1)) << ',' << opt_str(r.df_of(Deck::od1)) << ','
               << opt_str(r.od_of(Deck::od2)) << ',' << opt_str(r.df_of(Deck::od2)) << ','
               << opt_str(r.od_of(Deck::od3)) << ',' << opt_str(r.df_of(Deck::od3)) << ','
               << opt_str(r.od_of(Deck::od4)) << ',' << opt_str(r.df_of(Deck::od4)) << ',';
            if (auto it = zones.find(r.id); it != zones.end())
                os << it->second;
            os << '\n';
        }
        break;
    }
    case TableLayout::df_od5:
    case TableLayout::df_od5_zone: {
        const bool with_zone = e.layout == TableLayout::df_od5_zone;
        std::map<std::int64_t, int> zones;
        if (with_zone)
            zones = zone_column(rows, Deck::od5, e.value, v);
        os << "id,p,q,n,od1,df1,od2,df2,od3,df3,od4,df4,od5";
        if (with_zone)
            os << ",zone";
        os << '\n';
        for (const auto &r : rows) {
            os << r.id << ',' << r.p << ',' << r.q << ',' << r.n << ','
               << opt_str(r.od_of(Deck::od1)) << ',' << opt_str(r.df_of(Deck::od1)) << ','
               << opt_str(r.od_of(Deck::od2)) << ',' << opt_str(r.df_of(Deck::od2)) << ','
               << opt_str(r.od_of(Deck::od3)) << ',' << opt_str(r.df_of(Deck::od3)) << ','
               << opt_str(r.od_of(Deck::od4)) << ',' << opt_str(r.df_of(Deck::od4)) << ','
               << opt_str(r.od_of(Deck::od5));
            if (with_zone) {
                os << ',';
                if (auto it = zones.find(r.id); it != zones.end())
                    os << it->second;
            }
            os << '\n';
        }
        break;
    }
    case TableLayout::od5_df5_zone: {
        const auto zones = zone_column(rows, Deck::od5, e.value, v);
        os << "id,p,q,n,od1,od2,od3,od4,od5,df5,zone\n";
        for (const auto &r : rows) {
            os << r.id << ',' << r.p << ',' << r.q << ',' << r.n << ','
               << opt_str(r.od_of(Deck::od1)) << ',' << opt_str(r.od_of(Deck::od2)) << ','
               << opt_str(r.od_of(Deck::od3)) << ',' << opt_str(r.od_of(Deck::od4)) << ','
               << opt_str(r.od_of(Deck::od5)) << ',' << opt_str(r.df_of(Deck::od5)) << ',';
            if (auto it = zones.find(r.id); it != zones.end())
                os << it->second;
            os << '\n';
        }
        break;
    }
    case TableLayout::connect: {
        os << "id,p,q,n,d1,od1,df1,od2,df2,od3,df3,od4,df4\n";
        for (const auto &r : rows) {
            os << r.id << ',' << r.p << ',' << r.q << ',' << r.n << ',' << r.d1 << ','
               << opt_str(r.od_of(Deck::od1)) << ',' << opt_str(r.df_of(Deck::od1)) << ','
               << opt_str(r.od_of(Deck::od2)) << ',' << opt_str(r.df_of(Deck::od2)) << ','
               << opt_str(r.od_of(Deck::od3)) << ',' << opt_str(r.df_of(Deck::od3)) << ','
               << opt_str(r.od_of(Deck::od4)) << ',' << opt_str(r.df_of(Deck::od4)) << '\n';
        }
        break;
    }
    default:
        throw std::logic_error("render_series_table: bad layout");
    }
    return os.str();
}

std::string render_coverage_table(const TableEntry &e) {
    std::vector<DialPair> dials{e.dials};
    std::vector<Deck> decks;
    if (e.dials2) {
        dials.push_back(*e.dials2);
        decks = {Deck::od7, Deck::od8, Deck::od9, Deck::od10, Deck::od11};
    } else {
        decks = {Deck::od1, Deck::od2, Deck::od4, Deck::od5};
    }
    return coverage_report(e.value, e.parity, dials, decks, e.horizon).to_csv();
}

std::string render_interdelta_table() {
    const DialPair dials{0, -1, 8, 8};
    const std::string dial_cell = "{0 -1 8 8}"; // comma-free for the csv cell
    std::ostringstream os;
    os << "kind,delta,id,n,dials,sieve_value,deck\n";
    bool known_done = false;
    const std::pair<long long, BigInt> unknowns[3] = {
        {162, 785539}, {178, 936863}, {202, 441383}};
    for (const auto &[delta, n] : unknowns) {
        InterDeltaRecord rec = inter_delta_verify(122, 93, dials, n);
        if (!known_done) {
            if (!rec.known_ok)
                throw std::logic_error("interdelta: known zone not found");
            os << "known,122,93,," << dial_cell << ',' << rec.known_value << ','
               << deck_name(rec.known_deck) << '\n';
            known_done = true;
        }
        if (rec.unknown_hits.empty())
            throw std::logic_error("interdelta: no hit for " + n.str());
        const auto &hit = rec.unknown_hits.front();
        os << "unknown," << delta << ",," << n << ',' << dial_cell << ',' << hit.sieve_value
           << ',' << deck_name(hit.deck) << '\n';
    }
    return os.str();
}

std::string render_equilibrium_table(const TableEntry &e) {
    return equilibrium_csv(equilibrium_table(e.value, e.parity, e.rows));
}

} // namespace

const std::vector<TableEntry> &table_catalog() {
    static const std::vector<TableEntry> catalog = build_catalog();
    return catalog;
}

std::string render_table(const TableEntry &e) {
    switch (e.layout) {
    case TableLayout::coverage:
        return render_coverage_table(e);
    case TableLayout::equilibrium:
        return render_equilibrium_table(e);
    case TableLayout::interdelta:
        return render_interdelta_table();
    default:
        return render_series_table(e);
    }
}

std::string render_table(int number) {
    for (const auto &e : table_catalog())
        if (e.number == number)
            return render_table(e);
    throw std::invalid_argument("render_table: no table " + std::to_string(number));
}

namespace {

std::string dial_cell(const DialPair &d) {
    std::ostringstream os;
    os << '{' << d.a1 << ' ' << d.a2 << ' ' << d.v1 << ' ' << d.v2 << '}';
    return os.str();
}

std::string layout_name(TableLayout l) {
    switch (l) {
    case TableLayout::base: return "base";
    case TableLayout::df_zone: return "df_zone";
    case TableLayout::df_od5: return "df_od5";
    case TableLayout::df_od5_zone: return "df_od5_zone";
    case TableLayout::od5_df5_zone: return "od5_df5_zone";
    case TableLayout::connect: return "connect";
    case TableLayout::coverage: return "coverage";
    case TableLayout::equilibrium: return "equilibrium";
    case TableLayout::interdelta: return "interdelta";
    }
    return "?";
}

} // namespace

std::string catalog_csv() {
    std::ostringstream os;
    os << "table,layout,kind,value,parity,dials,dials2,rows,horizon\n";
    for (const auto &e : table_catalog()) {
        os << e.number << ',' << layout_name(e.layout) << ',';
        if (e.layout == TableLayout::interdelta) {
            os << ",,,,,,\n";
            continue;
        }
        os << (e.kind == SeriesKind::sum ? "sum" : "delta") << ',' << e.value << ','
           << (e.parity == Parity::odd ? "odd" : "even") << ',';
        if (e.layout != TableLayout::equilibrium)
            os << dial_cell(e.dials);
        os << ',';
        if (e.dials2)
            os << dial_cell(*e.dials2);
        os << ',' << e.rows << ',' << e.horizon << '\n';
    }
    return os.str();
}

void write_golden_tables(const std::string &dir, int threads) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    if (threads <= 0) {
        threads = 1;
        if (const char *env = std::getenv("DELTASIEVE_THREADS")) {
            threads = std::max(1, std::atoi(env));
        }
    }
    const auto &catalog = table_catalog();

    auto write_file = [&](const std::string &name, const std::string &content) {
        const fs::path final_path = fs::path(dir) / name;
        const fs::path tmp_path = fs::path(dir) / (name + ".tmp");
        {
            std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write " + tmp_path.string());
            out << content;
        }
        fs::rename(tmp_path, final_path);
    };

    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= catalog.size())
                return;
            const auto &e = catalog[i];
            char name[32];
            std::snprintf(name, sizeof name, "table_%02d.csv", e.number);
            write_file(name, render_table(e));
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    write_file("catalog.csv", catalog_csv());
}

std::string plot_data(const std::string &figure, const PlotParams &params) {
    std::ostringstream os;
    if (figure == "coverage-growth") {
        os << "delta,od2,od4,od5,od1,total\n";
        for (long long delta : params.deltas) {
            CoverageReport rep =
                coverage_report(delta, Parity::odd, {DialPair{-2, 2, 12, 12}},
                                {Deck::od1, Deck::od2, Deck::od4, Deck::od5},
                                std::max<std::int64_t>(2000, 30 * delta + 200));
            std::map<Deck, std::int64_t> per_deck;
            std::int64_t total = 0;
            for (const auto &row : rep.rows) {
                if (row.form_id == "unregistered")
                    continue;
                per_deck[row.deck] += row.coverage;
                total += row.coverage;
            }
            os << delta << ',' << per_deck[Deck::od2] << ',' << per_deck[Deck::od4] << ','
               << per_deck[Deck::od5] << ',' << per_deck[Deck::od1] << ',' << total << '\n';
        }
        return os.str();
    }
    if (figure == "rsa-unsafe-zone") {
        os << "v,deck,id_start,id_end,p_start,p_end,steady_value\n";
        const BigInt delta = params.delta ? params.delta : 1002;
        for (int i = 0; i < params.iterations; ++i) {
            const long long v = params.v_start + i * params.v_step;
            for (Deck deck : {Deck::od4, Deck::od5}) {
                SeriesSpec spec =
                    SeriesSpec::delta_series(delta, Parity::odd, DialPair{0, -1, v, v});
                spec.decks = {Deck::od1, Deck::od2, Deck::od3, Deck::od4, Deck::od5};
                const auto rows = generate(spec, GenLimit::rows(200000));
                ZoneScan scan = detect_zones(rows, ZoneCriterion::deck_only(deck), delta, v);
                for (const auto &z : scan.zones) {
                    if (z.form_id == "unregistered")
                        continue;
                    const auto &first = rows[static_cast<size_t>(z.id_start - 1)];
                    const auto &last = rows[static_cast<size_t>(z.id_end - 1)];
                    os << v << ',' << deck_name(deck) << ',' << z.id_start << ',' << z.id_end
                       << ',' << first.p << ',' << last.p << ',' << z.steady_value << '\n';
                }
            }
        }
        return os.str();
    }
    if (figure == "a-graph") {
        os << "n,od6\n";
        const BigInt delta = params.delta ? params.delta : 20;
        const DialPair dials = mod_floor(delta, 4) == 0
                                   ? DialPair{0, -1, params.v, params.v}
                                   : DialPair{-1, 0, params.v, params.v};
        SeriesSpec spec = SeriesSpec::delta_series(delta, Parity::odd, dials);
        spec.decks = {Deck::od6};
        generate_each(spec, GenLimit::steady(Deck::od6, 2, 1'000'000),
                      [&](const SeriesRow &row) {
                          os << row.n << ',' << opt_str(row.od_of(Deck::od6)) << '\n';
                          return true;
                      });
        return os.str();
    }
    if (figure == "gec-growth" || figure == "residue") {
        const auto stats = gec_growth(params.range_start, params.range_end);
        if (figure == "gec-growth")
            return gec_csv(stats);
        os << "delta,residue\n";
        for (const auto &st : stats)
            os << st.delta << ',' << st.residue << '\n';
        return os.str();
    }
    throw std::invalid_argument("plot_data: unknown figure '" + figure + "'");
}

} // namespace deltasieve
