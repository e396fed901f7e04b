#pragma once

#include "deltasieve/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltasieve {

/// Residue class of delta selecting a closed form.
enum class DeltaClass {
    any_even,   // delta = 2k
    mod4_0,     // delta = 4k
    mod4_2,     // delta = 4k+2
    odd_mod4_1, // delta = 4k+1
    odd_mod4_3, // delta = 4k+3
};

bool delta_in_class(const BigInt &delta, DeltaClass cls);

/// Which dial1 halves a closed form is registered for. v offsets are carried
/// separately because several forms are parameterized by v.
struct DialFamily {
    long long a1 = 0;
    long long a2 = 0;
    bool any_dial1 = false; // form holds regardless of dial1 (second-pair decks)

    bool matches(const DialPair &d) const { return any_dial1 || (a1 == d.a1 && a2 == d.a2); }
};

/// One registered steady-state form: value(delta) = c1*delta^2 + c2*delta + k
/// with exact rational coefficients.
struct SteadyStateForm {
    std::string id;   // stable label, e.g. "od4.base"
    Deck deck = Deck::od4;
    DialFamily dial1;
    long long v = 0;         // dial2 offset the form was registered with (0 = n/a)
    DeltaClass delta_class = DeltaClass::any_even;
    std::optional<Parity> p_parity; // empty = either parity
    long long c1_num = 0, c1_den = 1;
    long long c2_num = 0, c2_den = 1;
    BigInt k;

    BigInt eval(const BigInt &delta) const;
    bool applies(Deck deck, const DialPair &dials, const BigInt &delta, Parity parity) const;
};

/// The immutable form registry. Base construction registers every form the
/// closed-form catalog covers; callers may register additional empirically
/// found forms before freezing.
class FormRegistry {
  public:
    static const FormRegistry &standard();

    FormRegistry() = default;
    void add(SteadyStateForm form) { forms_.push_back(std::move(form)); }

    const std::vector<SteadyStateForm> &forms() const { return forms_; }
    std::vector<const SteadyStateForm *> lookup(Deck deck, const DialPair &dials,
                                                const BigInt &delta, Parity parity) const;

    /// Value-level match: the first form of `deck` whose eval(delta) equals
    /// `value` for the given v (used to annotate detected zones). Forms of
    /// the matching class/parity/v are preferred; any value match is a
    /// fallback.
    const SteadyStateForm *match_value(Deck deck, const BigInt &delta, long long v,
                                       const BigInt &value,
                                       std::optional<Parity> parity = std::nullopt) const;

    std::string to_csv() const; // deck,dial_family,delta_mod4,p_parity,c1_num,c1_den,c2_num,c2_den,k

  private:
    std::vector<SteadyStateForm> forms_;
};

struct SsvQuery {
    Deck deck = Deck::od4;
    BigInt delta;
    DialPair dials;
    std::optional<DialPair> dials2; // for od9..od11
    Parity p_parity = Parity::odd;
};

/// Closed-form steady value for a tabulated (deck, dials, delta class, parity)
/// family. Throws NoClosedForm when the query matches no registered family;
/// callers fall back to an empirical scan.
struct NoClosedForm : std::runtime_error {
    explicit NoClosedForm(const std::string &what) : std::runtime_error(what) {}
};

BigInt ssv_closed_form(const SsvQuery &q, const FormRegistry &reg = FormRegistry::standard());

/// First p at which the zone-0 steady value appears, for even delta and the
/// two base dial configurations {0,-1,2,2} / {-1,0,2,2}.
/// Throws std::invalid_argument for odd delta or other dials.
BigInt first_p_at_ssv(const BigInt &delta, const DialPair &dials, Parity p_parity);

/// Solves c1*x^2 + c2*x + k = observed for every registered form of `deck`
/// restricted to `family_ids` (all forms of the deck when empty); returns the
/// positive integral roots of matching residue class, deduplicated, ascending.
std::vector<BigInt> invert_ssv(Deck deck, const BigInt &observed,
                               const std::vector<std::string> &family_ids = {},
                               const FormRegistry &reg = FormRegistry::standard());

struct SsvVerification {
    bool pass = false;
    BigInt delta;
    BigInt steady_value;
    std::int64_t first_steady_id = 0; // 0 when the deck never settles
    BigInt companion_delta;           // the delta+4 cross-check
    bool companion_pass = false;
    std::string detail;
};

/// Generates the series for delta and for delta+4 and confirms the deck holds
/// the closed-form value from its switchover row for `horizon` further rows.
SsvVerification verify_ssv_empirically(const SsvQuery &q, std::int64_t horizon,
                                       const FormRegistry &reg = FormRegistry::standard());

} // namespace deltasieve
