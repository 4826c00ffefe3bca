#include "eisring/gaussian.hpp"

#include <algorithm>
#include <ostream>

namespace eisring {

using namespace checked;

Gaussian operator+(const Gaussian& x, const Gaussian& y) { return {add(x.a, y.a), add(x.b, y.b)}; }

Gaussian operator-(const Gaussian& x, const Gaussian& y) { return {sub(x.a, y.a), sub(x.b, y.b)}; }

Gaussian operator-(const Gaussian& x) { return {neg(x.a), neg(x.b)}; }

Gaussian operator*(const Gaussian& x, const Gaussian& y)
{
    return {sub(mul(x.a, y.a), mul(x.b, y.b)), add(mul(x.a, y.b), mul(x.b, y.a))};
}

Gaussian g_arith(GaussOp op, const Gaussian& x, const Gaussian& y)
{
    switch (op) {
    case GaussOp::Add: return x + y;
    case GaussOp::Sub: return x - y;
    case GaussOp::Mul: return x * y;
    case GaussOp::Neg: return -x;
    }
    throw Error(Errc::InvalidArgument, "unknown arithmetic operation");
}

Int g_norm(const Gaussian& x) { return add(mul(x.a, x.a), mul(x.b, x.b)); }

Gaussian g_conj(const Gaussian& x) { return {x.a, neg(x.b)}; }

Gaussian g_mod_reduce(const Gaussian& alpha, const Gaussian& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroModulus, "reduction modulo zero");
    const Gaussian num = alpha * g_conj(eta);
    const Int n = g_norm(eta);
    const Gaussian q{round_half_down(num.a, n), round_half_down(num.b, n)};
    return alpha - q * eta;
}

std::vector<Gaussian> g_residue_system(const Gaussian& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroModulus, "residue system modulo zero");
    const Int t = igcd(eta.a, eta.b);
    const Gaussian primitive{eta.a / t, eta.b / t};
    const Int width = mul(t, g_norm(primitive));
    std::vector<Gaussian> out;
    out.reserve(static_cast<std::size_t>(mul(width, t)));
    for (Int y = 0; y < t; ++y)
        for (Int x = 0; x < width; ++x)
            out.emplace_back(x, y);
    return out;
}

Int mannheim_weight_window(const Gaussian& theta, const Gaussian& eta, Int radius)
{
    const Gaussian base = g_mod_reduce(theta, eta);
    Int best = -1;
    for (Int u = -radius; u <= radius; ++u)
        for (Int v = -radius; v <= radius; ++v) {
            const Gaussian c = base + Gaussian{u, v} * eta;
            const Int w = add(checked::abs(c.a), checked::abs(c.b));
            if (best < 0 || w < best)
                best = w;
        }
    return best;
}

Int mannheim_weight(const Gaussian& theta, const Gaussian& eta) { return mannheim_weight_window(theta, eta, 1); }

std::string to_string(const Gaussian& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    if (x.a != 0)
        out = std::to_string(x.a);
    if (x.b != 0) {
        if (x.b > 0 && !out.empty())
            out += '+';
        if (x.b == -1)
            out += '-';
        else if (x.b != 1)
            out += std::to_string(x.b);
        out += 'i';
    }
    return out;
}

Gaussian parse_gaussian_pair(const std::string& text)
{
    const auto [a, b] = parse_int_pair(text);
    return {a, b};
}

std::ostream& operator<<(std::ostream& os, const Gaussian& x) { return os << to_string(x); }

} // namespace eisring
