#include "deltasieve/trapdoor.hpp"

#include <sstream>

namespace deltasieve {

TrapdoorParams TrapdoorParams::for_delta(const BigInt &delta) {
    if (delta < 2 || is_odd(delta))
        throw TrapdoorError("trapdoor: even delta required");
    TrapdoorParams p;
    p.delta = delta;
    p.delta_dials = mod_floor(delta, 4) == 0 ? DialPair{0, -1, 2, 2} : DialPair{-1, 0, 2, 2};
    p.sum_dials = DialPair{-1, 0, 2, 2};
    return p;
}

BigInt encode_message(const std::string &text) {
    if (text.empty())
        throw CodecError("codec: empty message");
    std::string digits;
    digits.reserve(text.size() * 2);
    for (unsigned char ch : text) {
        if (ch < 10 || ch > 99)
            throw CodecError("codec: byte " + std::to_string(int(ch)) +
                             " has no two-digit code");
        digits += std::to_string(int(ch));
    }
    return BigInt(digits);
}

std::string decode_message(const BigInt &value) {
    if (value < 10)
        throw CodecError("codec: value too small");
    const std::string digits = value.str();
    if (digits.size() % 2 != 0)
        throw CodecError("codec: odd digit count");
    std::string text;
    for (size_t i = 0; i < digits.size(); i += 2) {
        const int code = (digits[i] - '0') * 10 + (digits[i + 1] - '0');
        if (code < 10)
            throw CodecError("codec: code below 10 at position " + std::to_string(i / 2));
        text += static_cast<char>(code);
    }
    return text;
}

BigInt encode_message_wide(const std::string &text) {
    BigInt v = 1; // marker keeps leading zero bytes
    for (unsigned char ch : text)
        v = v * 256 + ch;
    return v;
}

std::string decode_message_wide(const BigInt &value) {
    if (value < 1)
        throw CodecError("codec: bad wide value");
    BigInt v = value;
    std::string reversed;
    while (v > 1) {
        reversed += static_cast<char>(static_cast<unsigned>(v % 256));
        v /= 256;
    }
    if (v != 1)
        throw CodecError("codec: missing wide marker");
    return std::string(reversed.rbegin(), reversed.rend());
}

std::optional<std::pair<BigInt, BigInt>> sum_series_factor_pair(const BigInt &N,
                                                                const BigInt &delta) {
    const BigInt disc = delta * delta - 4 * N;
    auto s = exact_sqrt(disc);
    if (!s || mod_floor(*s, 2) != mod_floor(delta, 2))
        return std::nullopt;
    return std::make_pair((delta - *s) / 2, (delta + *s) / 2);
}

TrapdoorAnchors trapdoor_anchors(const TrapdoorParams &params) {
    const BigInt &delta = params.delta;
    if (delta < 2 || is_odd(delta))
        throw TrapdoorError("trapdoor: even delta required");

    TrapdoorAnchors a;
    a.ssv = delta * delta / 2 + 2;
    // One first-p expression serves both classes: (delta^2 - 4 delta + 8)/8,
    // rounded up on the half-integers the 4k+2 class produces.
    const BigInt num = delta * delta - 4 * delta + 8;
    a.p_ssv = (num + 7) / 8;

    SeriesSpec spec = SeriesSpec::delta_series(delta, Parity::odd, params.delta_dials);
    spec.p_start = a.p_ssv;
    const SeriesRow row = compute_row(spec, a.p_ssv);
    const auto &od4 = row.od_of(Deck::od4);
    const auto &od6 = row.od_of(Deck::od6);
    if (!od4 || *od4 != a.ssv || !od6)
        throw TrapdoorError("trapdoor: steady row did not verify");
    a.od6_ssv = *od6;

    a.n_equil = mod_floor(delta, 4) == 0 ? a.od6_ssv : a.od6_ssv + 1;
    auto pair = sum_series_factor_pair(a.n_equil, delta);
    if (!pair)
        throw TrapdoorError("trapdoor: equilibrium N has no sum-series factor pair");
    a.p_equil = pair->first;
    a.q_equil = pair->second;
    return a;
}

EncryptionResult encrypt(const std::string &message, const TrapdoorParams &params,
                         MessageCodec codec) {
    const BigInt p =
        codec == MessageCodec::two_digit ? encode_message(message) : encode_message_wide(message);
    if (is_even(p))
        throw TrapdoorError("trapdoor: encoded p must be odd (append a pad byte)");

    const TrapdoorAnchors a = trapdoor_anchors(params);
    if (p >= a.p_ssv)
        throw TrapdoorError("trapdoor: message too large (p >= p_ssv)");

    EncryptionResult r;
    EncryptionTrace &t = r.trace;
    t.delta = params.delta;
    t.ssv = a.ssv;
    t.p_ssv = a.p_ssv;
    t.od6_ssv = a.od6_ssv;
    t.p = p;
    t.p_dist = a.p_ssv - p;
    t.q = p + params.delta;
    t.n = t.p * t.q;

    SeriesSpec spec = SeriesSpec::delta_series(params.delta, Parity::odd, params.delta_dials);
    spec.p_start = p;
    const SeriesRow row = compute_row(spec, p);
    t.od1 = *row.od_of(Deck::od1);
    t.od2 = *row.od_of(Deck::od2);
    const auto &od6 = row.od_of(Deck::od6);
    if (!od6)
        throw TrapdoorError("trapdoor: od6 undefined for the message row");
    t.od6 = *od6;

    t.n_equil = a.n_equil;
    t.p_equil = a.p_equil;
    t.q_equil = a.q_equil;
    t.p_sum_series = t.p_equil - t.p_dist;
    t.q_sum_series = params.delta - t.p_sum_series;
    t.n_sum_series = t.p_sum_series * t.q_sum_series;
    t.private_constant = t.n_sum_series - t.od6;

    r.ciphertext = Ciphertext{t.od6};
    r.key = TrapdoorPrivateKey{t.private_constant};
    return r;
}

std::string decrypt(const Ciphertext &c, const TrapdoorPrivateKey &key,
                    const TrapdoorParams &params, MessageCodec codec) {
    const BigInt n_sum = c.od6 + key.constant;
    auto sum_pair = sum_series_factor_pair(n_sum, params.delta);
    if (!sum_pair)
        throw TrapdoorError("trapdoor: invalid key (no sum-series roots)");

    const TrapdoorAnchors a = trapdoor_anchors(params);
    const BigInt q_dist = sum_pair->second - a.q_equil;
    const BigInt p = a.p_ssv - q_dist;
    if (p < 1)
        throw TrapdoorError("trapdoor: invalid key (recovered p not positive)");
    return codec == MessageCodec::two_digit ? decode_message(p) : decode_message_wide(p);
}

std::string key_material_to_text(const BigInt &delta, const Ciphertext &c,
                                 const TrapdoorPrivateKey &key) {
    std::ostringstream os;
    os << "delta=" << delta << "\nciphertext=" << c.od6 << "\nprivate=" << key.constant << '\n';
    return os.str();
}

KeyMaterial key_material_from_text(const std::string &text) {
    KeyMaterial m;
    bool have_delta = false, have_cipher = false, have_private = false;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("key material: bad line '" + line + "'");
        const std::string k = line.substr(0, eq);
        const BigInt v = parse_bigint(line.substr(eq + 1));
        if (k == "delta") {
            m.delta = v;
            have_delta = true;
        } else if (k == "ciphertext") {
            m.ciphertext.od6 = v;
            have_cipher = true;
        } else if (k == "private") {
            m.key.constant = v;
            have_private = true;
        } else {
            throw std::invalid_argument("key material: unknown key '" + k + "'");
        }
    }
    if (!have_delta || !have_cipher || !have_private)
        throw std::invalid_argument("key material: delta, ciphertext and private required");
    return m;
}

} // namespace deltasieve
