#pragma once

#include "deltasieve/factor.hpp"

#include <string>
#include <vector>

namespace deltasieve {

/// One paired row: N on the sum series against od6 on the delta series.
struct EquilibriumRow {
    BigInt n_sum;
    BigInt od6_delta;
    BigInt constant;            // n_sum - od6_delta
    std::optional<BigInt> df;   // difference against the previous constant
};

struct EquilibriumAnchor {
    BigInt delta;
    Parity parity = Parity::odd;
    BigInt n_anchor;   // od6_ssv or od6_ssv + 1
    BigInt od6_ssv;    // steady od6 on the delta series
    BigInt p_ssv;      // first steady p
    DialPair delta_dials;
    DialPair sum_dials;
};

/// Anchor of the delta/sum pairing: N = od6_ssv for (delta = 4k, odd p) and
/// (delta = 4k+2, even p); N = od6_ssv + 1 for the two complementary cases.
/// The delta-series dials are the od4 zone-0 family for (delta mod 4, parity);
/// the sum series always uses {-1,0,2,2}. Odd delta is unsupported.
EquilibriumAnchor equilibrium_anchor(const BigInt &delta, Parity p_parity);

/// Pairs N walking down the sum series from the anchor with od6 walking up
/// the delta series from its first steady row. length = 0 takes the full
/// table (down to the delta series head).
std::vector<EquilibriumRow> equilibrium_table(const BigInt &delta, Parity p_parity,
                                              std::int64_t length = 0);

struct GecStats {
    BigInt delta;          // the table compared against delta - 4
    std::int64_t total = 0;
    std::int64_t gec = 0;      // constants shared with the previous table
    std::int64_t nce = 0;      // total - gec
    std::int64_t residue = 0;  // total - 2*gec
};

enum class GecMode { positional, multiset };

/// Consecutive delta vs delta+4 comparisons over [delta_start, delta_end],
/// one GecStats per step attributed to the larger delta.
std::vector<GecStats> gec_growth(const BigInt &delta_start, const BigInt &delta_end,
                                 Parity p_parity = Parity::odd,
                                 GecMode mode = GecMode::positional);

/// Equilibrium-jump factorization: od6(n) + constant is a candidate N on the
/// sum series; every factor pair of N proposes delta = a + b for the
/// quadratic check. Constants may carry an arbitrary offset ("close
/// equilibrium") — callers simply pass shifted values.
std::optional<FactorResult> jump_factor(const BigInt &n, const DialPair &dials,
                                        const std::vector<BigInt> &constants,
                                        const BigInt &factor_bound = 1'000'000);

std::string equilibrium_csv(const std::vector<EquilibriumRow> &rows); // n_sum,od6_delta,constant,df
std::string gec_csv(const std::vector<GecStats> &stats);              // delta,gec,nce,residue

} // namespace deltasieve
