#include "eisring/quotient.hpp"

#include <optional>

namespace eisring {

using namespace checked;

namespace {

__extension__ using Wide = __int128;

Int mulmod(Int x, Int y, Int m)
{
    const auto r = (static_cast<Wide>(mod_floor(x, m)) * mod_floor(y, m)) % m;
    return static_cast<Int>(r);
}

std::optional<Modulus> try_decompose(const Eisenstein& eta, const Eisenstein& candidate)
{
    const Int t = igcd(candidate.a, candidate.b);
    const Int m = candidate.a / t;
    const Int n = candidate.b / t;
    Modulus out{eta, candidate, t, m, n, CoprimeSide::N};
    if (igcd(n, t) == 1)
        return out;
    if (igcd(m, t) == 1) {
        out.coprime_side = CoprimeSide::M;
        return out;
    }
    return std::nullopt;
}

} // namespace

Int Modulus::primitive_norm() const { return norm(primitive_part()); }

Int Modulus::width() const { return mul(t, primitive_norm()); }

Int Modulus::size() const { return mul(t, width()); }

Modulus decompose(const Eisenstein& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroModulus, "modulus must be nonzero");

    std::vector<Eisenstein> order{eta, canonical_associate(eta)};
    const auto& u = units();
    for (std::size_t i = 1; i < u.size(); ++i)
        order.push_back(u[i] * eta);

    for (const auto& candidate : order)
        if (auto mod = try_decompose(eta, candidate))
            return *mod;
    throw Error(Errc::NoSuitableAssociate, "no associate of " + to_string(eta) + " has m or n prime to t");
}

Eisenstein mu_reduce(const Eisenstein& alpha, const Modulus& mod) { return euclid_divmod(alpha, mod.working_eta).remainder; }

Eisenstein pi_lift_with(const Eisenstein& delta, const Modulus& mod, CoprimeSide side)
{
    const Int w = mod.width();
    const Int y_lift = mod_floor(delta.b, mod.t);
    const Int dy = sub(delta.b, y_lift);
    Int x_lift;
    if (side == CoprimeSide::N) {
        // x' = x - m n^{-1} (y - y')
        const Int n_inv = mod_inverse(mod.n, w);
        x_lift = mod_floor(sub(mod_floor(delta.a, w), mulmod(mulmod(mod.m, n_inv, w), dy, w)), w);
    } else {
        // x' = x + (m^{-1} n - 1)(y - y')
        const Int m_inv = mod_inverse(mod.m, w);
        const Int coeff = mod_floor(sub(mulmod(m_inv, mod.n, w), 1), w);
        x_lift = mod_floor(add(mod_floor(delta.a, w), mulmod(coeff, dy, w)), w);
    }
    return {x_lift, y_lift};
}

Eisenstein pi_lift(const Eisenstein& delta, const Modulus& mod) { return pi_lift_with(delta, mod, mod.coprime_side); }

bool class_equal(const Eisenstein& alpha, const Eisenstein& theta, const Modulus& mod)
{
    const Int w = mod.width();
    const Int dx = sub(theta.a, alpha.a);
    const Int dy = sub(theta.b, alpha.b);
    if (mod_floor(dy, mod.t) != 0)
        return false;
    if (mod.coprime_side == CoprimeSide::N) {
        // n (x' - x) = m (y' - y)  (mod t N(m + n rho))
        return mulmod(mod.n, dx, w) == mulmod(mod.m, dy, w);
    }
    // m (x' - x) = (n - m)(y - y')  (mod t N(m + n rho))
    return mulmod(mod.m, dx, w) == mulmod(sub(mod.n, mod.m), neg(dy), w);
}

Eisenstein ring_op_mod(RingOp op, const Eisenstein& alpha, const Eisenstein& theta, const Modulus& mod)
{
    const Eisenstein raw = op == RingOp::Add ? alpha + theta : alpha * theta;
    return mu_reduce(raw, mod);
}

IsomorphismKind isomorphism_kind(const Modulus& mod)
{
    if (mod.t == 1)
        return IsomorphismKind::Rational;
    if (mod.primitive_norm() == 1)
        return IsomorphismKind::FullGrid;
    return IsomorphismKind::Mixed;
}

ResidueSystem residue_system(const Modulus& mod)
{
    ResidueSystem rs{mod, {}, {}};
    const Int w = mod.width();
    const auto total = static_cast<std::size_t>(mod.size());
    rs.r_points.reserve(total);
    rs.e_points.reserve(total);
    for (Int y = 0; y < mod.t; ++y)
        for (Int x = 0; x < w; ++x) {
            const Eisenstein g{x, y};
            rs.r_points.push_back(g);
            rs.e_points.push_back(mu_reduce(g, mod));
        }
    return rs;
}

} // namespace eisring
