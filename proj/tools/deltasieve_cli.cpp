// Command-line front end: series generation, zone analysis, factorization
// routes, equilibrium tables, the trapdoor cipher, reference-table fixtures
// and figure datasets. CSV on stdout (or --out); key=value for scalar results.
// Exit codes: 0 success, 1 no result, 2 usage error, 3 internal error.
#include "CLI11.hpp"

#include "deltasieve/golden.hpp"
#include "deltasieve/trapdoor.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace deltasieve;

namespace {

struct NoResult : std::runtime_error {
    NoResult() : std::runtime_error("no result") {}
};

std::string out_path;

void emit(const std::string &text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
}

/// Re-renders csv as an aligned text table.
std::string prettify(const std::string &csv) {
    std::vector<std::vector<std::string>> grid;
    std::vector<size_t> width;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.push_back("");
        for (size_t i = 0; i < cells.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], cells[i].size());
        }
        grid.push_back(std::move(cells));
    }
    std::ostringstream os;
    for (const auto &row : grid) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << '\n';
    }
    return os.str();
}

Parity parse_parity(const std::string &s) {
    if (s == "odd")
        return Parity::odd;
    if (s == "even")
        return Parity::even;
    throw CLI::ValidationError("parity must be odd or even");
}

std::vector<Deck> parse_decks(const std::string &s) {
    std::vector<Deck> decks;
    std::istringstream is(s);
    std::string name;
    while (std::getline(is, name, ',')) {
        auto d = deck_from_name(name);
        if (!d)
            throw CLI::ValidationError("unknown deck '" + name + "'");
        decks.push_back(*d);
    }
    return decks;
}

std::string factor_line(const BigInt &n, const FactorResult &r) {
    std::ostringstream os;
    os << "n=" << n << ",p=" << r.p << ",q=" << r.q << ",delta=" << r.delta
       << ",method=" << r.method << ",steps=" << r.steps << '\n';
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"delta-sieve factorization toolkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // shared option storage
    std::string delta_s, sum_s, n_s, parity_s = "odd", dials_s = "0,-1,2,2", dials2_s;
    std::string decks_s, out_s, message, ciphertext_s, private_s, key_file, direction_s = "both";
    std::string target_s, figure, mode_s = "positional", deck_s = "od4";
    std::int64_t rows = 40, horizon = 4000, budget = 1000, length = 0, min_span = 3;
    std::int64_t table_no = 0, id_val = 0, steady_runs = 0;
    std::int64_t range_start = 20, range_end = 100, v_param = 2, iterations = 6;
    std::string v_schedule_s = "2,6,10";
    std::string factor_bound_s = "1000000";
    bool pretty = false, wide = false, anchor_only = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--out", out_s, "write output to a file instead of stdout");
        cmd->add_flag("--pretty", pretty, "aligned text instead of csv");
    };

    auto *series_cmd = app.add_subcommand("series", "generate a delta or sum series as csv");
    series_cmd->add_option("--delta", delta_s, "delta value");
    series_cmd->add_option("--sum", sum_s, "sum value");
    series_cmd->add_option("--parity", parity_s, "p parity: odd|even");
    series_cmd->add_option("--dials", dials_s, "a1,a2,v1,v2");
    series_cmd->add_option("--dials2", dials2_s, "second dial pair for od7..od11");
    series_cmd->add_option("--decks", decks_s, "comma list, e.g. od1,od2,od4");
    series_cmd->add_option("--rows", rows, "row count");
    series_cmd->add_option("--steady-runs", steady_runs,
                           "stop after this many identical values in --steady-deck");
    series_cmd->add_option("--steady-deck", deck_s, "deck for the steady-stop rule");
    add_common(series_cmd);

    auto *zones_cmd = app.add_subcommand("zones", "detect sieve zones and switchover marks");
    zones_cmd->add_option("--delta", delta_s)->required();
    zones_cmd->add_option("--parity", parity_s);
    zones_cmd->add_option("--dials", dials_s);
    zones_cmd->add_option("--deck", deck_s, "steady deck");
    zones_cmd->add_option("--rows", rows);
    add_common(zones_cmd);

    auto *coverage_cmd = app.add_subcommand("coverage", "zone coverage report");
    coverage_cmd->add_option("--delta", delta_s)->required();
    coverage_cmd->add_option("--parity", parity_s);
    coverage_cmd->add_option("--dials", dials_s);
    coverage_cmd->add_option("--dials2", dials2_s);
    coverage_cmd->add_option("--decks", decks_s, "defaults to od1,od2,od4,od5");
    coverage_cmd->add_option("--horizon", horizon);
    add_common(coverage_cmd);

    auto *ssv_cmd = app.add_subcommand("ssv", "closed-form steady value / empirical check");
    ssv_cmd->add_option("--deck", deck_s)->required();
    ssv_cmd->add_option("--delta", delta_s)->required();
    ssv_cmd->add_option("--dials", dials_s);
    ssv_cmd->add_option("--dials2", dials2_s);
    ssv_cmd->add_option("--parity", parity_s);
    ssv_cmd->add_option("--verify-horizon", horizon, "verify empirically over this many rows")
        ->default_val(0);
    add_common(ssv_cmd);

    auto *firstp_cmd = app.add_subcommand("first-p", "first p at the zone-0 steady value");
    firstp_cmd->add_option("--delta", delta_s)->required();
    firstp_cmd->add_option("--dials", dials_s);
    firstp_cmd->add_option("--parity", parity_s);
    add_common(firstp_cmd);

    std::string constants_s;
    auto *factor_cmd = app.add_subcommand("factor", "factor n via zone-0 and the scan schedule");
    factor_cmd->add_option("--n", n_s)->required();
    factor_cmd->add_option("--budget", budget);
    factor_cmd->add_option("--v-schedule", v_schedule_s, "dial2 offsets for the scan");
    factor_cmd->add_option("--constants", constants_s,
                           "equilibrium constants for the jump route, e.g. 0,1,-3");
    factor_cmd->add_option("--dials", dials_s, "dials for the jump route's od6");
    factor_cmd->add_option("--factor-bound", factor_bound_s, "jump-target trial division bound");
    add_common(factor_cmd);

    auto *neighbors_cmd = app.add_subcommand("neighbors", "previous/next same-delta ranges");
    neighbors_cmd->add_option("--n", n_s)->required();
    neighbors_cmd->add_option("--dials", dials_s);
    add_common(neighbors_cmd);

    auto *connect_cmd = app.add_subcommand("connect", "predict the next same-delta composite");
    connect_cmd->add_option("--n", n_s)->required();
    connect_cmd->add_option("--dials", dials_s);
    add_common(connect_cmd);

    auto *reflect_cmd = app.add_subcommand("reflect", "od6 reflection marks");
    reflect_cmd->add_option("--delta", delta_s)->required();
    reflect_cmd->add_option("--parity", parity_s);
    reflect_cmd->add_option("--dials", dials_s);
    reflect_cmd->add_option("--rows", rows);
    reflect_cmd->add_option("--min-span", min_span);
    add_common(reflect_cmd);

    auto *od6_cmd = app.add_subcommand("od6-search", "walk candidates sharing a target od6");
    od6_cmd->add_option("--n", n_s)->required();
    od6_cmd->add_option("--dials", dials_s);
    od6_cmd->add_option("--target", target_s)->required();
    od6_cmd->add_option("--direction", direction_s, "up|down|both");
    od6_cmd->add_option("--budget", budget);
    od6_cmd->add_option("--factor-bound", factor_bound_s);
    add_common(od6_cmd);

    auto *inter_cmd = app.add_subcommand("interdelta", "cross-delta zone verification");
    inter_cmd->add_option("--known-delta", delta_s)->required();
    inter_cmd->add_option("--id", id_val)->required();
    inter_cmd->add_option("--dials", dials_s);
    inter_cmd->add_option("--n", n_s)->required();
    inter_cmd->add_option("--parity", parity_s);
    add_common(inter_cmd);

    auto *eq_cmd = app.add_subcommand("equilibrium", "delta/sum pairing table");
    eq_cmd->add_option("--delta", delta_s)->required();
    eq_cmd->add_option("--parity", parity_s);
    eq_cmd->add_option("--length", length);
    eq_cmd->add_flag("--anchor-only", anchor_only, "print the anchor instead of the table");
    add_common(eq_cmd);

    auto *gec_cmd = app.add_subcommand("gec", "shared-constant growth across deltas");
    gec_cmd->add_option("--start", range_start)->required();
    gec_cmd->add_option("--end", range_end)->required();
    gec_cmd->add_option("--parity", parity_s);
    gec_cmd->add_option("--mode", mode_s, "positional|multiset");
    add_common(gec_cmd);

    auto *enc_cmd = app.add_subcommand("trapdoor-encrypt", "encrypt a message");
    enc_cmd->add_option("--delta", delta_s)->required();
    enc_cmd->add_option("--message", message)->required();
    enc_cmd->add_flag("--wide", wide, "base-256 codec for arbitrary bytes");
    enc_cmd->add_flag("--trace", anchor_only, "print the full intermediate ledger");
    add_common(enc_cmd);

    auto *dec_cmd = app.add_subcommand("trapdoor-decrypt", "decrypt a ciphertext");
    dec_cmd->add_option("--delta", delta_s);
    dec_cmd->add_option("--ciphertext", ciphertext_s);
    dec_cmd->add_option("--private", private_s);
    dec_cmd->add_option("--key-file", key_file, "line file: delta=/ciphertext=/private=");
    dec_cmd->add_flag("--wide", wide);
    add_common(dec_cmd);

    auto *golden_cmd = app.add_subcommand("golden-tables", "write the reference-table fixtures");
    golden_cmd->add_option("--out-dir", out_s)->required();
    golden_cmd->add_option("--table", table_no, "print one table to stdout instead");

    auto *plot_cmd = app.add_subcommand("plot-data", "figure datasets as csv");
    plot_cmd->add_option("--figure", figure,
                         "coverage-growth|rsa-unsafe-zone|a-graph|gec-growth|residue")
        ->required();
    plot_cmd->add_option("--deltas", delta_s, "comma list (coverage-growth)");
    plot_cmd->add_option("--delta", sum_s, "single delta (a-graph, rsa-unsafe-zone)");
    plot_cmd->add_option("--v", v_param, "dial2 offset (a-graph)");
    plot_cmd->add_option("--start", range_start);
    plot_cmd->add_option("--end", range_end);
    plot_cmd->add_option("--iterations", iterations);
    add_common(plot_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        out_path = out_s;

        if (series_cmd->parsed()) {
            if (delta_s.empty() == sum_s.empty())
                throw CLI::ValidationError("exactly one of --delta / --sum required");
            SeriesSpec spec;
            spec.kind = delta_s.empty() ? SeriesKind::sum : SeriesKind::delta;
            spec.value = parse_bigint(delta_s.empty() ? sum_s : delta_s);
            spec.p_parity = parse_parity(parity_s);
            spec.dials = {parse_dials(dials_s)};
            if (!dials2_s.empty())
                spec.dials.push_back(parse_dials(dials2_s));
            if (!decks_s.empty())
                spec.decks = parse_decks(decks_s);
            GenLimit limit = GenLimit::rows(rows);
            if (steady_runs > 0) {
                auto deck = deck_from_name(deck_s);
                if (!deck)
                    throw CLI::ValidationError("unknown deck " + deck_s);
                limit = GenLimit::steady(*deck, static_cast<int>(steady_runs), rows);
            }
            std::ostringstream os;
            os << series_csv_header() << '\n';
            generate_each(spec, limit, [&](const SeriesRow &row) {
                os << series_csv_row(row) << '\n';
                return true;
            });
            emit(pretty ? prettify(os.str()) : os.str());
            return 0;
        }

        if (zones_cmd->parsed()) {
            auto deck = deck_from_name(deck_s);
            if (!deck)
                throw CLI::ValidationError("unknown deck " + deck_s);
            SeriesSpec spec = SeriesSpec::delta_series(parse_bigint(delta_s),
                                                       parse_parity(parity_s),
                                                       parse_dials(dials_s));
            const auto series = generate(spec, GenLimit::rows(rows));
            const DialPair d = parse_dials(dials_s);
            const long long v = d.v1 == d.v2 ? d.v1 : 0;
            const ZoneScan scan =
                detect_zones(series, ZoneCriterion::deck_only(*deck), spec.value, v);
            std::ostringstream os;
            os << "kind,deck,zone_index,id,id_end,steady_value,coverage,anomaly,form_id\n";
            for (const auto &z : scan.zones)
                os << "zone," << deck_name(z.steady_deck) << ',' << z.zone_index << ','
                   << z.id_start << ',' << (z.open ? "inf" : std::to_string(z.id_end)) << ','
                   << z.steady_value << ',' << z.coverage << ",," << z.form_id << '\n';
            for (const auto &m : scan.switchovers)
                os << "switchover-zone," << deck_name(m.deck) << ",," << m.id << ",,,,"
                   << m.df_anomaly << ",\n";
            for (const auto &m : find_switchover_points(series))
                os << "switchover-point," << deck_name(m.deck) << ",," << m.id << ",,,,"
                   << m.df_anomaly << ",\n";
            emit(pretty ? prettify(os.str()) : os.str());
            return 0;
        }

        if (coverage_cmd->parsed()) {
            std::vector<DialPair> dials{parse_dials(dials_s)};
            if (!dials2_s.empty())
                dials.push_back(parse_dials(dials2_s));
            std::vector<Deck> decks = decks_s.empty()
                                          ? std::vector<Deck>{Deck::od1, Deck::od2, Deck::od4,
                                                              Deck::od5}
                                          : parse_decks(decks_s);
            const auto rep = coverage_report(parse_bigint(delta_s), parse_parity(parity_s), dials,
                                             decks, horizon);
            emit(pretty ? prettify(rep.to_csv()) : rep.to_csv());
            return 0;
        }

        if (ssv_cmd->parsed()) {
            auto deck = deck_from_name(deck_s);
            if (!deck)
                throw CLI::ValidationError("unknown deck " + deck_s);
            SsvQuery q{*deck, parse_bigint(delta_s), parse_dials(dials_s), std::nullopt,
                       parse_parity(parity_s)};
            if (!dials2_s.empty())
                q.dials2 = parse_dials(dials2_s);
            std::ostringstream os;
            try {
                os << "ssv=" << ssv_closed_form(q) << '\n';
            } catch (const NoClosedForm &e) {
                std::cerr << e.what() << '\n';
                return 1;
            }
            if (horizon > 0) {
                const auto rep = verify_ssv_empirically(q, horizon);
                os << "verified=" << (rep.pass ? "true" : "false")
                   << "\nfirst_steady_id=" << rep.first_steady_id
                   << "\ncompanion_delta=" << rep.companion_delta << '\n';
                if (!rep.pass) {
                    emit(os.str());
                    return 1;
                }
            }
            emit(os.str());
            return 0;
        }

        if (firstp_cmd->parsed()) {
            emit("p=" +
                 first_p_at_ssv(parse_bigint(delta_s), parse_dials(dials_s),
                                parse_parity(parity_s))
                     .str() +
                 "\n");
            return 0;
        }

        if (factor_cmd->parsed()) {
            const BigInt n = parse_bigint(n_s);
            if (!constants_s.empty()) {
                std::vector<BigInt> constants;
                std::istringstream is(constants_s);
                std::string tok;
                while (std::getline(is, tok, ','))
                    constants.push_back(parse_bigint(tok));
                if (auto r = jump_factor(n, parse_dials(dials_s), constants,
                                         parse_bigint(factor_bound_s))) {
                    emit(factor_line(n, *r));
                    return 0;
                }
                std::cerr << "no factor found via the jump constants\n";
                return 1;
            }
            if (auto r = factor_zone0(n)) {
                emit(factor_line(n, *r));
                return 0;
            }
            std::vector<long long> vs;
            {
                std::istringstream is(v_schedule_s);
                std::string tok;
                while (std::getline(is, tok, ','))
                    vs.push_back(std::stoll(tok));
            }
            const auto out = factor_scan(n, ScanSchedule::standard(vs), budget);
            if (out.result) {
                emit(factor_line(n, *out.result));
                return 0;
            }
            std::cerr << "no factor found (steps=" << out.steps_consumed << ")\n";
            return 1;
        }

        if (neighbors_cmd->parsed()) {
            const BigInt n = parse_bigint(n_s);
            std::ostringstream os;
            os << "which,lo,hi\n";
            for (const auto &r : neighbor_ranges(n, parse_dials(dials_s)))
                os << (r.which == NeighborRange::Which::prev ? "prev" : "next") << ',' << r.lo
                   << ',' << r.hi << '\n';
            emit(pretty ? prettify(os.str()) : os.str());
            return 0;
        }

        if (connect_cmd->parsed()) {
            const BigInt n = parse_bigint(n_s);
            try {
                const auto step = od_connect_step(n, parse_dials(dials_s));
                std::ostringstream os;
                os << "n_next=" << step.n_next << "\nd1_next=" << step.d1_next
                   << "\nod1_next=" << step.od1_next << "\nod2_next=" << step.od2_next << '\n';
                emit(os.str());
                return 0;
            } catch (const SteppingError &e) {
                std::cerr << e.what() << '\n';
                return 1;
            }
        }

        if (reflect_cmd->parsed()) {
            SeriesSpec spec = SeriesSpec::delta_series(parse_bigint(delta_s),
                                                       parse_parity(parity_s),
                                                       parse_dials(dials_s));
            const auto series = generate(spec, GenLimit::rows(rows));
            const auto marks = reflection_scan(series, min_span);
            std::ostringstream os;
            os << "x,y,gap,center_lo,center_hi,span\n";
            for (const auto &m : marks)
                os << m.x << ',' << m.y << ',' << m.gap << ',' << m.center_lo << ','
                   << m.center_hi << ',' << m.span << '\n';
            emit(pretty ? prettify(os.str()) : os.str());
            return marks.empty() ? 1 : 0;
        }

        if (od6_cmd->parsed()) {
            const SearchDirection dir = direction_s == "up"     ? SearchDirection::up
                                        : direction_s == "down" ? SearchDirection::down
                                                                : SearchDirection::both;
            const auto hits = od6_search(parse_bigint(n_s), parse_dials(dials_s),
                                         parse_bigint(target_s), dir, budget,
                                         parse_bigint(factor_bound_s));
            std::ostringstream os;
            os << "m,od6,delta\n";
            for (const auto &c : hits) {
                os << c.m << ',' << c.od6 << ',';
                if (c.delta_of_m)
                    os << *c.delta_of_m;
                os << '\n';
            }
            emit(pretty ? prettify(os.str()) : os.str());
            return hits.empty() ? 1 : 0;
        }

        if (inter_cmd->parsed()) {
            const auto rec = inter_delta_verify(parse_bigint(delta_s), id_val,
                                                parse_dials(dials_s), parse_bigint(n_s),
                                                parse_parity(parity_s));
            std::ostringstream os;
            os << "known_ok=" << (rec.known_ok ? "true" : "false");
            if (rec.known_ok)
                os << "\nknown_deck=" << deck_name(rec.known_deck)
                   << "\nknown_value=" << rec.known_value;
            os << '\n';
            for (const auto &hit : rec.unknown_hits)
                os << "hit: deck=" << deck_name(hit.deck) << ",sieve_value=" << hit.sieve_value
                   << ",delta=" << hit.delta << ",p=" << hit.p << ",q=" << hit.q << '\n';
            emit(os.str());
            return rec.unknown_hits.empty() ? 1 : 0;
        }

        if (eq_cmd->parsed()) {
            const BigInt delta = parse_bigint(delta_s);
            const Parity parity = parse_parity(parity_s);
            if (anchor_only) {
                const auto a = equilibrium_anchor(delta, parity);
                std::ostringstream os;
                os << "n_anchor=" << a.n_anchor << "\nod6_ssv=" << a.od6_ssv
                   << "\np_ssv=" << a.p_ssv << '\n';
                emit(os.str());
                return 0;
            }
            const auto table = equilibrium_table(delta, parity, length);
            emit(pretty ? prettify(equilibrium_csv(table)) : equilibrium_csv(table));
            return 0;
        }

        if (gec_cmd->parsed()) {
            const auto stats =
                gec_growth(range_start, range_end, parse_parity(parity_s),
                           mode_s == "multiset" ? GecMode::multiset : GecMode::positional);
            emit(pretty ? prettify(gec_csv(stats)) : gec_csv(stats));
            return 0;
        }

        if (enc_cmd->parsed()) {
            const auto params = TrapdoorParams::for_delta(parse_bigint(delta_s));
            const auto r =
                encrypt(message, params, wide ? MessageCodec::wide : MessageCodec::two_digit);
            std::ostringstream os;
            os << key_material_to_text(params.delta, r.ciphertext, r.key);
            if (anchor_only) {
                const auto &t = r.trace;
                os << "ssv=" << t.ssv << "\np_ssv=" << t.p_ssv << "\nod6_ssv=" << t.od6_ssv
                   << "\np=" << t.p << "\np_dist=" << t.p_dist << "\nq=" << t.q << "\nn=" << t.n
                   << "\nod1=" << t.od1 << "\nod2=" << t.od2 << "\nn_equil=" << t.n_equil
                   << "\np_equil=" << t.p_equil << "\nq_equil=" << t.q_equil
                   << "\np_sum_series=" << t.p_sum_series << "\nq_sum_series=" << t.q_sum_series
                   << "\nn_sum_series=" << t.n_sum_series << '\n';
            }
            emit(os.str());
            return 0;
        }

        if (dec_cmd->parsed()) {
            KeyMaterial m;
            if (!key_file.empty()) {
                std::ifstream in(key_file);
                if (!in)
                    throw std::runtime_error("cannot read " + key_file);
                std::ostringstream buf;
                buf << in.rdbuf();
                m = key_material_from_text(buf.str());
            } else {
                if (delta_s.empty() || ciphertext_s.empty() || private_s.empty())
                    throw CLI::ValidationError(
                        "--delta, --ciphertext and --private (or --key-file) required");
                m.delta = parse_bigint(delta_s);
                m.ciphertext.od6 = parse_bigint(ciphertext_s);
                m.key.constant = parse_bigint(private_s);
            }
            const auto params = TrapdoorParams::for_delta(m.delta);
            const std::string text = decrypt(m.ciphertext, m.key, params,
                                             wide ? MessageCodec::wide : MessageCodec::two_digit);
            emit(text + "\n");
            return 0;
        }

        if (golden_cmd->parsed()) {
            if (table_no > 0) {
                std::cout << render_table(static_cast<int>(table_no));
                return 0;
            }
            write_golden_tables(out_s);
            std::cerr << "wrote 47 tables + catalog to " << out_s << '\n';
            return 0;
        }

        if (plot_cmd->parsed()) {
            PlotParams params;
            if (!delta_s.empty()) {
                std::istringstream is(delta_s);
                std::string tok;
                while (std::getline(is, tok, ','))
                    params.deltas.push_back(std::stoll(tok));
            }
            if (!sum_s.empty())
                params.delta = std::stoll(sum_s);
            params.v = v_param;
            params.range_start = range_start;
            params.range_end = range_end;
            params.iterations = static_cast<int>(iterations);
            if (figure == "coverage-growth" && params.deltas.empty())
                params.deltas = {160, 480};
            const std::string csv = plot_data(figure, params);
            emit(pretty ? prettify(csv) : csv);
            return 0;
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const NoResult &) {
        return 1;
    } catch (const CodecError &e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const TrapdoorError &e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
