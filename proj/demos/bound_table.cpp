// Prints the Singleton-like and field-size-aware bounds side by side.

#include <cstdio>

#include "lrc/bounds.hpp"

int main() {
    using namespace lrc;
    const std::size_t n = 15, r = 2;
    for (std::uint64_t q : {2u, 4u}) {
        std::printf("n=%zu r=%zu q=%llu\n%4s %10s %10s %4s\n", n, r, static_cast<unsigned long long>(q), "k",
                    "singleton", "general", "t");
        for (std::size_t k = r + 1; k < n; ++k) {
            if (!rate_bound_ok(n, k, r)) break;
            const auto g = general_bound(n, k, r, q);
            std::printf("%4zu %10zu %10zu %4zu\n", k, singleton_like(n, k, r), g ? g->value : 0, g ? g->t : 0);
        }
        std::printf("\n");
    }
}
