#pragma once

// Single-erasure repair through locality witnesses.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

/// Systematic encoder: codeword = message * G with G the canonical generator.
class Encoder {
public:
    explicit Encoder(const LinearCode& code) : g_(generator_from_pcm(code)) {}

    const GfMatrix& generator() const { return g_; }

    std::vector<elem_t> encode(std::span<const elem_t> message) const {
        if (message.size() != g_.rows()) throw Error("message length must equal k");
        const Field& f = g_.field();
        std::vector<elem_t> out(g_.cols(), 0);
        for (std::size_t i = 0; i < g_.rows(); ++i) {
            if (!f.contains(message[i])) throw Error("message symbol out of range");
            if (message[i] == 0) continue;
            for (std::size_t c = 0; c < g_.cols(); ++c) out[c] = f.add(out[c], f.mul(message[i], g_(i, c)));
        }
        return out;
    }

private:
    GfMatrix g_;
};

inline std::vector<elem_t> encode(const LinearCode& code, std::span<const elem_t> message) {
    return Encoder(code).encode(message);
}

using ReceivedWord = std::vector<std::optional<elem_t>>;

struct RepairTrace {
    std::size_t erased_coordinate = 0;
    std::vector<std::size_t> reads;
    elem_t recovered = 0;
    bool success = false;
    std::size_t read_count = 0;
};

/// Recovers the one erased symbol from its witness parity check,
/// c_i = -(1/w_i) sum_{j != i} w_j c_j, reading only the witness support.
/// `success` means the repaired word satisfies every parity check; since the
/// witness covers i, column i of H is nonzero and this pins c_i uniquely.
inline RepairTrace repair_single(const LinearCode& code, const ReceivedWord& received, const LocalityProfile& profile) {
    if (received.size() != code.n()) throw Error("received word length must equal n");
    std::optional<std::size_t> erased;
    for (std::size_t i = 0; i < received.size(); ++i) {
        if (received[i]) continue;
        if (erased) throw Error("multiple erasures");
        erased = i;
    }
    if (!erased) throw Error("no erasure to repair");
    const std::size_t i = *erased;
    if (profile.witness_rows.size() != code.n() || profile.witness_rows[i].empty() || profile.witness_rows[i][i] == 0)
        throw Error("no locality witness for coordinate " + std::to_string(i));

    const Field& f = code.field();
    const auto& w = profile.witness_rows[i];
    RepairTrace t;
    t.erased_coordinate = i;
    elem_t acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j == i || w[j] == 0) continue;
        t.reads.push_back(j);
        acc = f.add(acc, f.mul(w[j], *received[j]));
    }
    t.recovered = f.neg(f.div(acc, w[i]));
    t.read_count = t.reads.size();
    std::vector<elem_t> word(code.n());
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = j == i ? t.recovered : *received[j];
    const auto syndrome = code.pcm().apply(word);
    t.success = std::all_of(syndrome.begin(), syndrome.end(), [](elem_t x) { return x == 0; });
    return t;
}

struct SimulationMetrics {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
    std::uint64_t total_reads = 0;
    std::size_t baseline_reads = 0;  // an MDS code reads k symbols per repair
    std::size_t max_reads = 0;

    /// Null when no trials ran.
    std::optional<double> success_rate() const {
        if (trials == 0) return std::nullopt;
        return static_cast<double>(successes) / static_cast<double>(trials);
    }
    std::optional<double> mean_reads() const {
        if (trials == 0) return std::nullopt;
        return static_cast<double>(total_reads) / static_cast<double>(trials);
    }
};

/// Random (message, erased coordinate) trials from a seeded mt19937_64.
/// A trial succeeds when the repaired symbol equals the original.
inline SimulationMetrics simulate(const LinearCode& code, const LocalityProfile& profile, std::uint64_t trials,
                                  std::uint64_t seed) {
    SimulationMetrics m;
    m.trials = trials;
    m.seed = seed;
    m.baseline_reads = code.k();
    const Encoder enc(code);
    const std::uint64_t q = code.field().size();
    std::mt19937_64 rng(seed);
    std::vector<elem_t> msg(code.k());
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& s : msg) s = static_cast<elem_t>(rng() % q);
        const auto cw = enc.encode(msg);
        const auto pos = static_cast<std::size_t>(rng() % code.n());
        ReceivedWord rx(cw.begin(), cw.end());
        rx[pos].reset();
        const RepairTrace tr = repair_single(code, rx, profile);
        if (tr.success && tr.recovered == cw[pos]) ++m.successes;
        m.total_reads += tr.read_count;
        m.max_reads = std::max(m.max_reads, tr.read_count);
    }
    return m;
}

}  // namespace lrc
