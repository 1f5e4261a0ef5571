#ifndef WARD_RANDOM_HPP
#define WARD_RANDOM_HPP

#include <cstddef>
#include <random>
#include <vector>

#include <ward/psi_context.hpp>
#include <ward/rational.hpp>
#include <ward/series.hpp>

namespace ward
{

// Small-integer coefficient lists, drawn independently of any context so the
// same draw can be replayed over several psi-sequences.
struct IntegerDraw {
    std::vector<long> coeffs;

    WardSeries bind(const PsiContextPtr &ctx) const
    {
        std::vector<Rational> r(coeffs.begin(), coeffs.end());
        return WardSeries::from_rationals(ctx, r);
    }
};

inline IntegerDraw draw_integers(std::mt19937_64 &rng, std::size_t order, long magnitude = 4,
                                 bool nonzero_constant = false)
{
    std::uniform_int_distribution<long> dist(-magnitude, magnitude);
    IntegerDraw d;
    d.coeffs.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) d.coeffs.push_back(dist(rng));
    if (nonzero_constant) {
        while (d.coeffs[0] == 0) d.coeffs[0] = dist(rng);
    }
    return d;
}

inline std::size_t draw_order(std::mt19937_64 &rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace ward

#endif
