#pragma once

#include "critmon/northcott.hpp"

#include <random>

namespace critmon {

/// Deterministic instance sampler. Exponents are drawn with explicit modular
/// reduction so the stream depends only on the engine, not on library
/// distribution internals.
class InstanceSampler {
public:
    explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

    long draw(long max_exp) { return 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(max_exp)); }

    NorthcottExponents sample(int n, long max_exp, bool all_ones_mvec = false) {
        NorthcottExponents e;
        e.n = n;
        const std::size_t m = static_cast<std::size_t>(n - 1);
        for (std::size_t i = 0; i < m; ++i) e.diag.push_back(draw(max_exp));
        for (std::size_t i = 0; i < m; ++i) e.xn.push_back(draw(max_exp));
        for (std::size_t i = 0; i < m; ++i)
            e.mvec.push_back(all_ones_mvec ? 1 : draw(max_exp));
        return e;
    }

    /// Rejection-sample a numerical instance; optionally bound a_n.
    NorthcottExponents sample_numerical(int n, long max_exp, bool all_ones_mvec = false,
                                        const Int& max_an = 0) {
        for (;;) {
            NorthcottExponents e = sample(n, max_exp, all_ones_mvec);
            const MonoidPresentation p = monoid_presentation(e);
            if (!p.is_numerical) continue;
            if (max_an != 0 && p.weight.back() > max_an) continue;
            return e;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace critmon
