#include "deltasieve/steady_state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace deltasieve {

bool delta_in_class(const BigInt &delta, DeltaClass cls) {
    const int r = static_cast<int>(mod_floor(delta, 4));
    switch (cls) {
    case DeltaClass::any_even: return r == 0 || r == 2;
    case DeltaClass::mod4_0: return r == 0;
    case DeltaClass::mod4_2: return r == 2;
    case DeltaClass::odd_mod4_1: return r == 1;
    case DeltaClass::odd_mod4_3: return r == 3;
    }
    return false;
}

namespace {

std::string class_name(DeltaClass cls) {
    switch (cls) {
    case DeltaClass::any_even: return "even";
    case DeltaClass::mod4_0: return "0";
    case DeltaClass::mod4_2: return "2";
    case DeltaClass::odd_mod4_1: return "1";
    case DeltaClass::odd_mod4_3: return "3";
    }
    return "?";
}

} // namespace

BigInt SteadyStateForm::eval(const BigInt &delta) const {
    // Exact rational evaluation; every registered form yields an integer on
    // deltas of its class.
    BigInt num = BigInt(c1_num) * delta * delta * c2_den + BigInt(c2_num) * delta * c1_den;
    BigInt den = BigInt(c1_den) * c2_den;
    if (num % den != 0)
        throw std::logic_error("steady form " + id + " is not integral at delta " + delta.str());
    return num / den + k;
}

bool SteadyStateForm::applies(Deck d, const DialPair &dials, const BigInt &delta,
                              Parity parity) const {
    if (d != deck || !dial1.matches(dials))
        return false;
    if (v != 0) {
        if (dials.v1 != dials.v2 || dials.v1 != v)
            return false;
    }
    if (!delta_in_class(delta, delta_class))
        return false;
    if (p_parity && parity != *p_parity)
        return false;
    return true;
}

namespace {

FormRegistry build_standard() {
    FormRegistry reg;
    const DialFamily zero_minus{0, -1, false};
    const DialFamily minus_zero{-1, 0, false};
    const DialFamily any{0, 0, true};

    auto add = [&](std::string id, Deck deck, DialFamily fam, long long v, DeltaClass cls,
                   std::optional<Parity> parity, long long c1n, long long c1d, long long c2n,
                   long long c2d, BigInt k) {
        reg.add(SteadyStateForm{std::move(id), deck, fam, v, cls, parity, c1n, c1d, c2n, c2d,
                                std::move(k)});
    };

    // od4 zone-0 base families, v = 2: delta^2/2 + 2.
    add("od4.base.on", Deck::od4, zero_minus, 2, DeltaClass::mod4_0, Parity::odd, 1, 2, 0, 1, 2);
    add("od4.base.en", Deck::od4, zero_minus, 2, DeltaClass::mod4_2, Parity::even, 1, 2, 0, 1, 2);
    add("od4.base.no", Deck::od4, minus_zero, 2, DeltaClass::mod4_2, Parity::odd, 1, 2, 0, 1, 2);
    add("od4.base.ne", Deck::od4, minus_zero, 2, DeltaClass::mod4_0, Parity::even, 1, 2, 0, 1, 2);

    // od2 zone-0 families: (delta/2)^2.
    add("od2.sq.on", Deck::od2, zero_minus, 2, DeltaClass::mod4_2, Parity::odd, 1, 4, 0, 1, 0);
    add("od2.sq.en", Deck::od2, zero_minus, 2, DeltaClass::mod4_0, Parity::even, 1, 4, 0, 1, 0);
    add("od2.sq.no", Deck::od2, minus_zero, 2, DeltaClass::mod4_0, Parity::odd, 1, 4, 0, 1, 0);
    add("od2.sq.ne", Deck::od2, minus_zero, 2, DeltaClass::mod4_2, Parity::even, 1, 4, 0, 1, 0);

    // od4 shifted zones: delta^2/2 + v^2/2 for v = 2k, k odd. The dial order
    // pairs with (class, parity) the same way the base family does.
    for (long long v : {6, 10, 14, 18, 22, 26, 30}) {
        const std::string s = "od4.v" + std::to_string(v);
        const BigInt k = BigInt(v) * v / 2;
        add(s + ".on", Deck::od4, zero_minus, v, DeltaClass::mod4_0, Parity::odd, 1, 2, 0, 1, k);
        add(s + ".en", Deck::od4, zero_minus, v, DeltaClass::mod4_2, Parity::even, 1, 2, 0, 1, k);
        add(s + ".no", Deck::od4, minus_zero, v, DeltaClass::mod4_2, Parity::odd, 1, 2, 0, 1, k);
        add(s + ".ne", Deck::od4, minus_zero, v, DeltaClass::mod4_0, Parity::even, 1, 2, 0, 1, k);
    }

    // od5 zones: delta^2 + (3/4)v^2 for v = 4k, k odd; {-2,-1} serves
    // (4k, odd p) and (4k+2, even p), {-1,-2} the two complements.
    const DialFamily m2m1{-2, -1, false};
    const DialFamily m1m2{-1, -2, false};
    for (long long v : {4, 12, 20, 28}) {
        const std::string s = "od5.v" + std::to_string(v);
        const BigInt k = 3 * BigInt(v) * v / 4;
        add(s + ".on", Deck::od5, m2m1, v, DeltaClass::mod4_0, Parity::odd, 1, 1, 0, 1, k);
        add(s + ".en", Deck::od5, m2m1, v, DeltaClass::mod4_2, Parity::even, 1, 1, 0, 1, k);
        add(s + ".no", Deck::od5, m1m2, v, DeltaClass::mod4_2, Parity::odd, 1, 1, 0, 1, k);
        add(s + ".ne", Deck::od5, m1m2, v, DeltaClass::mod4_0, Parity::even, 1, 1, 0, 1, k);
    }

    // od5 odd-delta zone-0: delta^2 + 3, v = 2.
    add("od5.odd.3n", Deck::od5, minus_zero, 2, DeltaClass::odd_mod4_3, Parity::odd, 1, 1, 0, 1, 3);
    add("od5.odd.1z", Deck::od5, zero_minus, 2, DeltaClass::odd_mod4_1, Parity::odd, 1, 1, 0, 1, 3);
    add("od5.odd.1n", Deck::od5, minus_zero, 2, DeltaClass::odd_mod4_1, Parity::even, 1, 1, 0, 1, 3);
    add("od5.odd.3z", Deck::od5, zero_minus, 2, DeltaClass::odd_mod4_3, Parity::even, 1, 1, 0, 1, 3);

    // Second-pair decks for dial pairs {0,-1,6,6} + {-2,1,16,16}.
    add("od9a", Deck::od9, any, 0, DeltaClass::any_even, std::nullopt, 1, 2, 0, 1, 72);
    add("od9b", Deck::od9, any, 0, DeltaClass::any_even, std::nullopt, 1, 2, 0, 1, 32);
    add("od10", Deck::od10, any, 0, DeltaClass::any_even, std::nullopt, 3, 4, 0, 1, 168);
    add("od11", Deck::od11, any, 0, DeltaClass::any_even, std::nullopt, 5, 4, 0, 1, 144);

    // od1 settles at (delta/2)^2 in a late zone (coverage tables).
    add("od1.sq", Deck::od1, any, 0, DeltaClass::any_even, std::nullopt, 1, 4, 0, 1, 0);
    // od2 reaches (delta/2)^2 under wider dial settings than the base family.
    add("od2.sq", Deck::od2, any, 0, DeltaClass::any_even, std::nullopt, 1, 4, 0, 1, 0);
    // od7/od8 are perfect-square decks; they also settle at (delta/2)^2.
    add("od7.sq", Deck::od7, any, 0, DeltaClass::any_even, std::nullopt, 1, 4, 0, 1, 0);
    add("od8.sq", Deck::od8, any, 0, DeltaClass::any_even, std::nullopt, 1, 4, 0, 1, 0);
    // od4/od5 value-shape forms for arbitrary dial1 (zone annotation only;
    // ssv_closed_form never selects them because v=0 forms require the exact
    // v match below).
    add("od4.shape", Deck::od4, any, 0, DeltaClass::any_even, std::nullopt, 1, 2, 0, 1, 0);
    add("od5.shape", Deck::od5, any, 0, DeltaClass::any_even, std::nullopt, 1, 1, 0, 1, 0);
    return reg;
}

} // namespace

const FormRegistry &FormRegistry::standard() {
    static const FormRegistry reg = build_standard();
    return reg;
}

std::vector<const SteadyStateForm *> FormRegistry::lookup(Deck deck, const DialPair &dials,
                                                          const BigInt &delta,
                                                          Parity parity) const {
    std::vector<const SteadyStateForm *> out;
    for (const auto &f : forms_)
        if (f.applies(deck, dials, delta, parity))
            out.push_back(&f);
    return out;
}

const SteadyStateForm *FormRegistry::match_value(Deck deck, const BigInt &delta, long long v,
                                                 const BigInt &value,
                                                 std::optional<Parity> parity) const {
    auto scan = [&](bool strict) -> const SteadyStateForm * {
        for (const auto &f : forms_) {
            if (f.deck != deck)
                continue;
            if (strict && ((f.v != 0 && f.v != v) || !delta_in_class(delta, f.delta_class) ||
                           (parity && f.p_parity && *f.p_parity != *parity)))
                continue;
            BigInt expect;
            // Shape forms reconstitute their constant from the zone's v.
            if (f.id == "od4.shape")
                expect = f.eval(delta) + BigInt(v) * v / 2;
            else if (f.id == "od5.shape")
                expect = f.eval(delta) + 3 * BigInt(v) * v / 4;
            else
                expect = f.eval(delta);
            if (expect == value)
                return &f;
        }
        return nullptr;
    };
    if (const SteadyStateForm *hit = scan(true))
        return hit;
    return scan(false);
}

std::string FormRegistry::to_csv() const {
    std::ostringstream os;
    os << "deck,dial_family,delta_mod4,p_parity,c1_num,c1_den,c2_num,c2_den,k\n";
    for (const auto &f : forms_) {
        os << deck_name(f.deck) << ',';
        if (f.dial1.any_dial1)
            os << "any";
        else
            os << '{' << f.dial1.a1 << ' ' << f.dial1.a2 << '}';
        os << ',' << class_name(f.delta_class) << ','
           << (f.p_parity ? (*f.p_parity == Parity::odd ? "odd" : "even") : "any") << ','
           << f.c1_num << ',' << f.c1_den << ',' << f.c2_num << ',' << f.c2_den << ',' << f.k
           << '\n';
    }
    return os.str();
}

BigInt ssv_closed_form(const SsvQuery &q, const FormRegistry &reg) {
    if (q.delta < 1)
        throw std::invalid_argument("ssv: delta must be positive");
    for (const auto &f : reg.forms()) {
        if (f.dial1.any_dial1)
            continue; // value-shape entries are for annotation, not evaluation
        if (f.applies(q.deck, q.dials, q.delta, q.p_parity))
            return f.eval(q.delta);
    }
    // Second-pair decks keyed on the exact dual-dial configuration.
    if (q.dials2 && q.dials == DialPair{0, -1, 6, 6} && *q.dials2 == DialPair{-2, 1, 16, 16}) {
        for (const auto &f : reg.forms()) {
            if (f.deck != q.deck || !f.dial1.any_dial1 || f.v != 0 ||
                static_cast<int>(q.deck) < static_cast<int>(Deck::od9) ||
                !delta_in_class(q.delta, f.delta_class))
                continue;
            if (f.id == "od9b")
                continue; // od9 settles twice; the first zone carries the od9a value
            return f.eval(q.delta);
        }
    }
    throw NoClosedForm("no closed form known for " + deck_name(q.deck) + " with dials " +
                       q.dials.str() + " and delta " + q.delta.str());
}

BigInt first_p_at_ssv(const BigInt &delta, const DialPair &dials, Parity p_parity) {
    if (delta < 1 || is_odd(delta))
        throw std::invalid_argument("first_p_at_ssv: even delta required");
    const bool zero_minus = dials == DialPair{0, -1, 2, 2};
    const bool minus_zero = dials == DialPair{-1, 0, 2, 2};
    if (!zero_minus && !minus_zero)
        throw std::invalid_argument("first_p_at_ssv: dials must be {0,-1,2,2} or {-1,0,2,2}");

    const bool mod4_0 = mod_floor(delta, 4) == 0;
    const BigInt m = (delta - 4) / 4; // integral when delta = 4k
    const BigInt t = (delta - 6) / 4; // integral when delta = 4k+2
    const bool k_even = mod4_0 && mod_floor(delta / 4, 2) == 0;

    BigInt p;
    if (zero_minus) {
        if (p_parity == Parity::odd)
            p = mod4_0 ? 2 * m * (m + 1) + 1 : (t + 1) * (t + 1) - t;
        else if (mod4_0)
            p = k_even ? m * (m + 1) - (m - 1) : m * m;
        else
            p = 2 * ((t + 1) * (t + 1) - 1) + 2;
    } else if (p_parity == Parity::odd) {
        if (mod4_0)
            p = k_even ? m * m : m * (m + 1) - (m - 1);
        else
            p = 2 * ((t + 1) * (t + 1) - 1) + 3;
    } else {
        p = mod4_0 ? 2 * m * (m + 1) + 2 : t * (t + 1) + 2;
    }
    // Tiny deltas push the formulas below the series head; the zone then
    // simply starts at the first row.
    const BigInt head = p_parity == Parity::odd ? 1 : 2;
    return p < head ? head : p;
}

std::vector<BigInt> invert_ssv(Deck deck, const BigInt &observed,
                               const std::vector<std::string> &family_ids,
                               const FormRegistry &reg) {
    std::vector<BigInt> out;
    for (const auto &f : reg.forms()) {
        if (f.deck != deck)
            continue;
        if (!family_ids.empty() &&
            std::find(family_ids.begin(), family_ids.end(), f.id) == family_ids.end())
            continue;
        // c1 x^2 + c2 x + (k - observed) = 0, cleared of denominators.
        const BigInt L = BigInt(f.c1_den) * f.c2_den;
        const BigInt A = BigInt(f.c1_num) * f.c2_den;
        const BigInt B = BigInt(f.c2_num) * f.c1_den;
        const BigInt C = (f.k - observed) * L;
        if (A == 0)
            continue;
        const BigInt disc = B * B - 4 * A * C;
        auto s = exact_sqrt(disc);
        if (!s)
            continue;
        for (const BigInt &num : {-B + *s, -B - *s}) {
            if (num % (2 * A) != 0)
                continue;
            BigInt root = num / (2 * A);
            if (root <= 0 || !delta_in_class(root, f.delta_class))
                continue;
            if (std::find(out.begin(), out.end(), root) == out.end())
                out.push_back(root);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SsvVerification verify_ssv_empirically(const SsvQuery &q, std::int64_t horizon,
                                       const FormRegistry &reg) {
    if (horizon < 1)
        throw std::invalid_argument("verify_ssv: horizon must be positive");

    auto check_one = [&](const BigInt &delta, BigInt &steady_out, std::int64_t &first_id,
                         std::string &why) {
        SsvQuery probe = q;
        probe.delta = delta;
        BigInt expect;
        try {
            expect = ssv_closed_form(probe, reg);
        } catch (const NoClosedForm &e) {
            why = e.what();
            return false;
        }
        steady_out = expect;

        SeriesSpec spec = SeriesSpec::delta_series(delta, q.p_parity, q.dials);
        if (q.dials2)
            spec.dials.push_back(*q.dials2);
        spec.decks = {q.deck};

        first_id = 0;
        std::int64_t held = 0;
        bool ok = true;
        generate_each(spec, GenLimit::rows(1'000'000), [&](const SeriesRow &row) {
            const auto &cell = row.od_of(q.deck);
            if (first_id == 0) {
                if (cell && *cell == expect)
                    first_id = row.id;
                return true;
            }
            if (!cell || *cell != expect) {
                ok = false;
                why = "value broke at id " + std::to_string(row.id);
                return false;
            }
            return ++held < horizon;
        });
        if (first_id == 0) {
            why = "steady value never reached";
            return false;
        }
        return ok;
    };

    SsvVerification rep;
    rep.delta = q.delta;
    rep.companion_delta = q.delta + 4;
    rep.pass = check_one(q.delta, rep.steady_value, rep.first_steady_id, rep.detail);
    BigInt companion_value;
    std::int64_t companion_id = 0;
    std::string companion_detail;
    rep.companion_pass = check_one(rep.companion_delta, companion_value, companion_id,
                                   companion_detail);
    if (!rep.companion_pass && rep.detail.empty())
        rep.detail = "companion: " + companion_detail;
    rep.pass = rep.pass && rep.companion_pass;
    return rep;
}

} // namespace deltasieve
