// Encodes one message, erases each symbol in turn and repairs it locally.

#include <cstdio>
#include <vector>

#include "lrc/lrc.hpp"

int main() {
    using namespace lrc;
    ConstructionParams p;
    p.family = Family::vdm_d4;
    p.q = 5;
    p.n = 8;
    p.r = 3;
    const Construction c = construct(p);
    const LocalityProfile prof = locality_profile(c.code);

    const std::vector<elem_t> msg{1, 4, 0, 2};
    const auto cw = encode(c.code, msg);
    std::printf("codeword:");
    for (auto s : cw) std::printf(" %u", static_cast<unsigned>(s));
    std::printf("\n");

    for (std::size_t i = 0; i < cw.size(); ++i) {
        ReceivedWord rx(cw.begin(), cw.end());
        rx[i].reset();
        const RepairTrace t = repair_single(c.code, rx, prof);
        std::printf("erase %zu -> %u from {", i, static_cast<unsigned>(t.recovered));
        for (std::size_t j = 0; j < t.reads.size(); ++j) std::printf(j ? " %zu" : "%zu", t.reads[j]);
        std::printf("} %s\n", t.success && t.recovered == cw[i] ? "ok" : "FAILED");
    }

    const SimulationMetrics m = simulate(c.code, prof, 1000, 1);
    std::printf("1000 random trials: success %.3f, mean reads %.3f (an MDS code reads %zu)\n", *m.success_rate(),
                *m.mean_reads(), m.baseline_reads);
}
