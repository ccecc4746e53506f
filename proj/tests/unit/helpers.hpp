#pragma once

#include <random>
#include <vector>

#include "nlper/enumerate.hpp"
#include "nlper/io.hpp"
#include "nlper/lattice.hpp"

namespace testing {

inline nlper::Polyomino grid(const char* text) { return nlper::parse_polyomino(text); }

// Every fixed polyomino up to area `full`, plus `per_area` deterministic
// picks for each area in (full, upto].
inline std::vector<nlper::Polyomino> corpus(int full, int upto, int per_area, unsigned seed = 7) {
    std::vector<nlper::Polyomino> out;
    for (int n = 1; n <= full; ++n)
        for (auto& p : nlper::enumerate_connected(n)) out.push_back(p);
    std::mt19937 rng(seed);
    for (int n = full + 1; n <= upto; ++n) {
        std::vector<nlper::Polyomino> all;
        std::uint64_t seen = 0;
        // Reservoir sampling keeps memory flat for the large areas.
        nlper::for_each_connected(n, [&](const nlper::Polyomino& p) {
            ++seen;
            if (all.size() < static_cast<std::size_t>(per_area)) {
                all.push_back(p);
            } else {
                std::uniform_int_distribution<std::uint64_t> d(0, seen - 1);
                const auto j = d(rng);
                if (j < all.size()) all[j] = p;
            }
        });
        out.insert(out.end(), all.begin(), all.end());
    }
    return out;
}

}  // namespace testing
