// Fibres of J_x(1) over Q(zeta_n) at a few primes, by table and by reduction.

#include <cstdio>

#include "jackson/jackson.hpp"

using namespace jackson;

int main() {
    struct Case {
        long n, ell;
    };
    for (auto [n, ell] : {Case{3, 7}, Case{5, 11}, Case{3, 3}, Case{4, 2}})
        for (long v : {0, 1, 3}) {
            RamificationInput in{n, v, n % ell == 0, 1, ell};
            FibreType table = classify_fibre(in);
            FibreType seen = specialize_then_inspect(n, 1, v, ell);
            std::printf("n=%ld ell=%-2ld v=%ld  %-14s %-14s", n, ell, v, to_string(table), to_string(seen));
            if (!in.ell_divides_n) std::printf("  %s", to_string(semistability_verdict(table, v, n)));
            std::printf("\n");
        }
}
