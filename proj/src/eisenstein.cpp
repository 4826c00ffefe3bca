#include "eisring/eisenstein.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace eisring {

using namespace checked;

Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return {add(x.a, y.a), add(x.b, y.b)}; }

Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return {sub(x.a, y.a), sub(x.b, y.b)}; }

Eisenstein operator-(const Eisenstein& x) { return {neg(x.a), neg(x.b)}; }

// (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho, using rho^2 = -1 - rho.
Eisenstein operator*(const Eisenstein& x, const Eisenstein& y)
{
    Int bd = mul(x.b, y.b);
    return {sub(mul(x.a, y.a), bd), sub(add(mul(x.a, y.b), mul(x.b, y.a)), bd)};
}

Eisenstein arith(ArithOp op, const Eisenstein& x, const Eisenstein& y)
{
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Neg: return -x;
    }
    throw Error(Errc::InvalidArgument, "unknown arithmetic operation");
}

Eisenstein conjugate(const Eisenstein& x) { return {sub(x.a, x.b), neg(x.b)}; }

Int norm(const Eisenstein& x) { return sub(add(mul(x.a, x.a), mul(x.b, x.b)), mul(x.a, x.b)); }

bool is_unit(const Eisenstein& x) { return norm(x) == 1; }

const std::array<Eisenstein, 6>& units()
{
    static const std::array<Eisenstein, 6> u{
        Eisenstein{1, 0}, Eisenstein{-1, 0}, Eisenstein{0, 1},
        Eisenstein{0, -1}, Eisenstein{-1, -1}, Eisenstein{1, 1},
    };
    return u;
}

std::array<Eisenstein, 6> associates(const Eisenstein& x)
{
    std::array<Eisenstein, 6> out;
    const auto& u = units();
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[i] * x;
    return out;
}

Eisenstein canonical_associate(const Eisenstein& x)
{
    if (x.is_zero())
        return x;
    for (const auto& y : associates(x))
        if (y.a > 0 && y.b >= 0 && y.b < y.a)
            return y;
    throw Error(Errc::InvalidArgument, "no canonical associate found"); // unreachable
}

bool are_associates(const Eisenstein& x, const Eisenstein& y) { return canonical_associate(x) == canonical_associate(y); }

DivMod euclid_divmod(const Eisenstein& alpha, const Eisenstein& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroModulus, "division by zero");

    // z = alpha / eta = (p + q rho) / N. In Cartesian form Re z = (2p - q)/(2N)
    // and Im z / sqrt(3) = q / (2N); shifting by rho adds N/(2N) to the first
    // and subtracts it from the second.
    const Eisenstein num = alpha * conjugate(eta);
    const Int n = norm(eta);
    const Int den = mul(2, n);
    const Int re2 = sub(mul(2, num.a), num.b);

    // theta1 = r1 + s1 * sqrt(-3) = (r1 + s1) + 2 s1 rho
    const Int r1 = round_half_down(re2, den);
    const Int s1 = round_half_down(num.b, den);
    const Eisenstein theta1{add(r1, s1), mul(2, s1)};

    // theta2 = r2 + s2 * sqrt(-3) + rho = (r2 + s2) + (2 s2 + 1) rho
    const Int r2 = round_half_down(add(re2, n), den);
    const Int s2 = round_half_down(sub(num.b, n), den);
    const Eisenstein theta2{add(r2, s2), add(mul(2, s2), 1)};

    const Eisenstein d1 = alpha - theta1 * eta;
    const Eisenstein d2 = alpha - theta2 * eta;
    const Int n1 = norm(d1), n2 = norm(d2);

    // Re(theta1) = r1 and Re(theta2) = r2 - 1/2, so they never coincide and
    // Re(theta1) < Re(theta2) reduces to r1 < r2.
    if (n1 < n2 || (n1 == n2 && r1 < r2))
        return {theta1, d1};
    return {theta2, d2};
}

bool divides(const Eisenstein& eta, const Eisenstein& alpha)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroModulus, "divisibility by zero");
    const Eisenstein num = alpha * conjugate(eta);
    const Int n = norm(eta);
    return num.a % n == 0 && num.b % n == 0;
}

Eisenstein exact_div(const Eisenstein& alpha, const Eisenstein& eta)
{
    if (!divides(eta, alpha))
        throw Error(Errc::InvalidArgument, "division is not exact");
    const Eisenstein num = alpha * conjugate(eta);
    const Int n = norm(eta);
    return {num.a / n, num.b / n};
}

Eisenstein gcd(const Eisenstein& x, const Eisenstein& y)
{
    if (x.is_zero() && y.is_zero())
        throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    Eisenstein u = x, v = y;
    while (!v.is_zero()) {
        Eisenstein r = euclid_divmod(u, v).remainder;
        u = v;
        v = r;
    }
    return canonical_associate(u);
}

bool is_primitive(const Eisenstein& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroInput, "primitivity of zero");
    return igcd(eta.a, eta.b) == 1;
}

PrimeKind classify_prime(const Eisenstein& gamma)
{
    if (gamma.is_zero() || is_unit(gamma))
        throw Error(Errc::UnitOrZero, "classify_prime needs a nonzero nonunit");
    const Int n = norm(gamma);
    if (n == 3)
        return PrimeType1{};
    if (is_rational_prime(n) && n % 3 == 1)
        return PrimeType2{n};
    const Int p = exact_isqrt(n);
    if (p > 0 && p % 3 == 2 && is_rational_prime(p) && canonical_associate(gamma) == Eisenstein{p, 0})
        return PrimeType3{p};
    return NotPrime{};
}

bool is_prime(const Eisenstein& gamma)
{
    if (gamma.is_zero() || is_unit(gamma))
        return false;
    return !std::holds_alternative<NotPrime>(classify_prime(gamma));
}

namespace {

// Some psi with N(psi) = q, q a rational prime = 1 mod 3.
Eisenstein split_prime(Int q)
{
    for (Int a = 1; mul(3, mul(a, a)) <= mul(4, q); ++a) {
        const Int s = exact_isqrt(sub(mul(4, q), mul(3, mul(a, a))));
        if (s < 0 || (a + s) % 2 != 0)
            continue;
        return {a, (a + s) / 2};
    }
    throw Error(Errc::InvalidArgument, "prime does not split in Z[rho]");
}

bool factor_less(const PrimePower& x, const PrimePower& y)
{
    const Int nx = norm(x.prime), ny = norm(y.prime);
    if (nx != ny)
        return nx < ny;
    return x.prime < y.prime;
}

} // namespace

Eisenstein Factorization::product() const
{
    Eisenstein acc = unit;
    for (const auto& f : factors)
        for (int i = 0; i < f.exponent; ++i)
            acc = acc * f.prime;
    return acc;
}

Factorization factorize(const Eisenstein& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroInput, "factorize(0)");

    Factorization out;
    Eisenstein rest = eta;
    for (const auto& [p, e] : factor_integer(norm(eta))) {
        std::vector<Eisenstein> candidates;
        if (p == 3) {
            candidates.push_back(canonical_associate({1, -1}));
        } else if (p % 3 == 2) {
            candidates.emplace_back(p, 0);
        } else {
            const Eisenstein psi = split_prime(p);
            candidates.push_back(canonical_associate(psi));
            candidates.push_back(canonical_associate(conjugate(psi)));
        }
        for (const auto& c : candidates) {
            int count = 0;
            while (divides(c, rest)) {
                rest = exact_div(rest, c);
                ++count;
            }
            if (count > 0)
                out.factors.push_back({c, count});
        }
    }
    if (!is_unit(rest))
        throw Error(Errc::InvalidArgument, "factorization left a nonunit cofactor"); // unreachable
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

bool primitivity_structure_check(const Eisenstein& eta)
{
    if (eta.is_zero())
        throw Error(Errc::ZeroInput, "primitivity_structure_check(0)");
    std::set<Int> split_norms;
    for (const auto& f : factorize(eta).factors) {
        const PrimeKind kind = classify_prime(f.prime);
        if (std::holds_alternative<PrimeType1>(kind)) {
            if (f.exponent > 1)
                return false;
        } else if (const auto* t2 = std::get_if<PrimeType2>(&kind)) {
            if (!split_norms.insert(t2->q).second)
                return false;
        } else {
            return false;
        }
    }
    return true;
}

bool ideal_member(const Eisenstein& x, Int k, const Eisenstein& g)
{
    if (k == 0 || g.is_zero())
        throw Error(Errc::ZeroIdealGenerator, "ideal generator is zero");
    const Int d = mul(checked::abs(k), norm(g));
    const Int first = add(mul(sub(g.a, g.b), x.a), mul(g.b, x.b));
    const Int second = sub(mul(g.a, x.b), mul(g.b, x.a));
    return first % d == 0 && second % d == 0;
}

std::string to_string(const Eisenstein& x)
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
        out += "ρ";
    }
    return out;
}

Eisenstein parse_eisenstein_pair(const std::string& text)
{
    const auto [a, b] = parse_int_pair(text);
    return {a, b};
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << to_string(x); }

} // namespace eisring
