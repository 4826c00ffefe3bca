#include "eisring/metrics.hpp"

#include <algorithm>

namespace eisring {

using namespace checked;

Int hex_weight(const Eisenstein& x)
{
    const Int a = checked::abs(x.a);
    const Int b = checked::abs(x.b);
    const Int d = checked::abs(sub(x.a, x.b));
    return std::min({add(a, b), add(d, a), add(d, b)});
}

Int hex_distance(const Eisenstein& x, const Eisenstein& y) { return hex_weight(x - y); }

Int hex_distance(std::span<const Eisenstein> x, std::span<const Eisenstein> y)
{
    if (x.size() != y.size())
        throw Error(Errc::LengthMismatch, "vectors of different length");
    Int total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total = add(total, hex_distance(x[i], y[i]));
    return total;
}

Int sq_euclid_distance(const Eisenstein& x, const Eisenstein& y) { return norm(x - y); }

Int sq_euclid_distance(std::span<const Eisenstein> x, std::span<const Eisenstein> y)
{
    if (x.size() != y.size())
        throw Error(Errc::LengthMismatch, "vectors of different length");
    Int total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total = add(total, sq_euclid_distance(x[i], y[i]));
    return total;
}

Int min_class_hex_weight_window(const Eisenstein& delta, const Modulus& mod, Int radius)
{
    const Eisenstein base = mu_reduce(delta, mod);
    Int best = -1;
    for (Int u = -radius; u <= radius; ++u)
        for (Int v = -radius; v <= radius; ++v) {
            const Int w = hex_weight(base + Eisenstein{u, v} * mod.working_eta);
            if (best < 0 || w < best)
                best = w;
        }
    return best;
}

Int min_class_hex_weight(const Eisenstein& delta, const Modulus& mod) { return min_class_hex_weight_window(delta, mod, 1); }

} // namespace eisring
