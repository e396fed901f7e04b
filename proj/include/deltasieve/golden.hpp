#pragma once

#include "deltasieve/equilibrium.hpp"

#include <map>
#include <string>

namespace deltasieve {

/// Layouts the reference tables use.
enum class TableLayout {
    base,          // id,p,q,n,isqrt_n,d1,d2,d1_sq,d2_sq,od1,od2,od3,od4,od6
    df_zone,       // id,p,q,n,od1,df1,od2,df2,od3,df3,od4,df4,zone
    df_od5,        // id,p,q,n,od1,df1,od2,df2,od3,df3,od4,df4,od5
    df_od5_zone,   // df_od5 + zone
    od5_df5_zone,  // id,p,q,n,od1,od2,od3,od4,od5,df5,zone
    connect,       // id,p,q,n,d1,od1,df1,od2,df2,od3,df3,od4,df4
    coverage,      // deck,zone_index,id_start,id_end,coverage,steady_value,form_id
    equilibrium,   // n_sum,od6_delta,constant,df
    interdelta,    // kind,delta,id,n,dials,sieve_value,deck
};

struct TableEntry {
    int number = 0;
    TableLayout layout = TableLayout::base;
    SeriesKind kind = SeriesKind::delta;
    long long value = 0; // delta or sum (fits comfortably for every table)
    Parity parity = Parity::odd;
    DialPair dials;
    std::optional<DialPair> dials2;
    std::int64_t rows = 0;    // row span 1..rows (series layouts)
    std::int64_t horizon = 0; // scan horizon (coverage layout)
};

/// The parameter catalog for every reference table, in table order.
const std::vector<TableEntry> &table_catalog();

/// Renders one table to CSV; deterministic byte-for-byte.
std::string render_table(const TableEntry &entry);
std::string render_table(int number);

std::string catalog_csv();

/// Writes table_01.csv .. table_47.csv plus catalog.csv into `dir`
/// (created when missing). Files are written atomically; `threads` caps the
/// worker count (0 = DELTASIEVE_THREADS or single-threaded).
void write_golden_tables(const std::string &dir, int threads = 0);

/// Figure datasets (data only, no rendering):
///   coverage-growth  delta list -> per-deck coverage totals
///   rsa-unsafe-zone  od4/od5 zone spans as dial2 steps upward
///   a-graph          (n, od6) walk until the steady value
///   gec-growth       delta,gec,nce,residue over a delta range
///   residue          delta,residue over a delta range
struct PlotParams {
    std::vector<long long> deltas;      // coverage-growth
    long long delta = 0;                // rsa-unsafe-zone, a-graph
    long long v = 2;                    // a-graph
    long long v_start = 8, v_step = 8;  // rsa-unsafe-zone
    int iterations = 6;                 // rsa-unsafe-zone
    long long range_start = 20, range_end = 100; // gec-growth, residue
};

std::string plot_data(const std::string &figure, const PlotParams &params);

} // namespace deltasieve
