#pragma once

#include "deltasieve/equilibrium.hpp"

#include <string>
#include <vector>

namespace deltasieve {

struct CodecError : std::runtime_error {
    explicit CodecError(const std::string &what) : std::runtime_error(what) {}
};

struct TrapdoorError : std::runtime_error {
    explicit TrapdoorError(const std::string &what) : std::runtime_error(what) {}
};

struct TrapdoorParams {
    BigInt delta; // public, even
    DialPair delta_dials;  // {0,-1,2,2} for delta = 4k, {-1,0,2,2} for delta = 4k+2
    DialPair sum_dials;    // always {-1,0,2,2}

    static TrapdoorParams for_delta(const BigInt &delta);
};

struct TrapdoorPrivateKey {
    BigInt constant; // may be negative and very large
};

struct Ciphertext {
    BigInt od6;
};

/// Every intermediate of the encryption ledger, for auditing and tests.
struct EncryptionTrace {
    BigInt delta;
    BigInt ssv;
    BigInt p_ssv;
    BigInt od6_ssv;
    BigInt p;
    BigInt p_dist;
    BigInt q;
    BigInt n;
    BigInt od1, od2;
    BigInt od6;
    BigInt n_equil;
    BigInt p_equil, q_equil;
    BigInt p_sum_series, q_sum_series;
    BigInt n_sum_series;
    BigInt private_constant;
};

struct EncryptionResult {
    Ciphertext ciphertext;
    TrapdoorPrivateKey key;
    EncryptionTrace trace;
};

/// Two-digit ASCII codec: every byte's decimal code must be 10..99; the
/// encoded integer is their concatenation. Bytes outside that range raise
/// CodecError (three-digit codes would not decode unambiguously).
BigInt encode_message(const std::string &text);
std::string decode_message(const BigInt &value);

/// Length-safe codec for arbitrary bytes: base-256 with a leading marker
/// byte, usable where the two-digit scheme cannot represent the message.
BigInt encode_message_wide(const std::string &text);
std::string decode_message_wide(const BigInt &value);

/// Integer roots of x^2 - delta*x + N = 0 with p <= q (p may be negative);
/// nothing when the discriminant is not a perfect square.
std::optional<std::pair<BigInt, BigInt>> sum_series_factor_pair(const BigInt &N,
                                                                const BigInt &delta);

enum class MessageCodec { two_digit, wide };

/// Deterministic encryption: the encoded p must be odd and below p_ssv.
EncryptionResult encrypt(const std::string &message, const TrapdoorParams &params,
                         MessageCodec codec = MessageCodec::two_digit);

std::string decrypt(const Ciphertext &c, const TrapdoorPrivateKey &key,
                    const TrapdoorParams &params, MessageCodec codec = MessageCodec::two_digit);

/// p_ssv / steady value / od6_ssv shared by encrypt and decrypt.
struct TrapdoorAnchors {
    BigInt ssv;
    BigInt p_ssv;
    BigInt od6_ssv;
    BigInt n_equil;
    BigInt p_equil, q_equil;
};
TrapdoorAnchors trapdoor_anchors(const TrapdoorParams &params);

/// Line format: delta=<int> / ciphertext=<int> / private=<int>.
std::string key_material_to_text(const BigInt &delta, const Ciphertext &c,
                                 const TrapdoorPrivateKey &key);
struct KeyMaterial {
    BigInt delta;
    Ciphertext ciphertext;
    TrapdoorPrivateKey key;
};
KeyMaterial key_material_from_text(const std::string &text);

} // namespace deltasieve
