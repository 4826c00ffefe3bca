#include "eisring/codes_fields.hpp"

#include <set>
#include <sstream>

#include "eisring/metrics.hpp"

namespace eisring {

namespace {

Word reduce_word(const Word& w, const Modulus& mod)
{
    Word out;
    out.reserve(w.size());
    for (const auto& c : w)
        out.push_back(mu_reduce(c, mod));
    return out;
}

Int component_distance(const Eisenstein& x, const Eisenstein& y, const Modulus& mod, CodeMetric metric)
{
    const Eisenstein d = mu_reduce(x - y, mod);
    return metric == CodeMetric::Hex ? hex_weight(d) : norm(d);
}

Int word_distance(const Word& x, const Word& y, const Modulus& mod, CodeMetric metric)
{
    if (x.size() != y.size())
        throw Error(Errc::LengthMismatch, "codewords of different lengths");
    Int total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total = checked::add(total, component_distance(x[i], y[i], mod, metric));
    return total;
}

} // namespace

LinearCode span(const Modulus& alphabet, std::size_t length, const std::vector<Word>& generators, std::size_t bound)
{
    LinearCode code{alphabet, length, {}, {}};
    for (const auto& g : generators) {
        if (g.size() != length)
            throw Error(Errc::LengthMismatch, "generator length differs from code length");
        code.generators.push_back(reduce_word(g, alphabet));
    }
    const std::vector<Eisenstein> scalars = residue_system(alphabet).e_points;

    std::set<Word> words{Word(length, Eisenstein{0, 0})};
    for (const auto& g : code.generators) {
        std::set<Word> next;
        for (const auto& w : words)
            for (const auto& s : scalars) {
                Word v(length);
                for (std::size_t i = 0; i < length; ++i)
                    v[i] = mu_reduce(w[i] + s * g[i], alphabet);
                next.insert(std::move(v));
                if (next.size() > bound)
                    throw Error(Errc::SpanTooLarge, "span exceeds " + std::to_string(bound) + " codewords");
            }
        words = std::move(next);
    }
    code.codewords.assign(words.begin(), words.end());
    return code;
}

bool is_group_code(const std::vector<Word>& words, const Modulus& mod)
{
    if (words.empty())
        return false;
    std::set<Word> reduced;
    for (const auto& w : words)
        reduced.insert(reduce_word(w, mod));
    for (const auto& x : reduced)
        for (const auto& y : reduced) {
            if (x.size() != y.size())
                return false;
            Word d(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                d[i] = mu_reduce(x[i] - y[i], mod);
            if (!reduced.contains(d))
                return false;
        }
    return true;
}

Int code_min_distance(const std::vector<Word>& words, const Modulus& mod, CodeMetric metric)
{
    if (words.size() < 2)
        throw Error(Errc::TooFewWords, "minimum distance needs at least two codewords");
    std::optional<Int> best;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const Int d = word_distance(words[i], words[j], mod, metric);
            if (!best || d < *best)
                best = d;
        }
    return *best;
}

std::optional<Int> code_min_weight(const std::vector<Word>& words, const Modulus& mod, CodeMetric metric)
{
    std::optional<Int> best;
    for (const auto& w : words) {
        const Int d = word_distance(w, Word(w.size(), Eisenstein{0, 0}), mod, metric);
        if (d != 0 && (!best || d < *best))
            best = d;
    }
    return best;
}

// ---------------------------------------------------------------------------

namespace {

Modulus prime_base(const Eisenstein& gamma)
{
    bool prime = false;
    try {
        prime = is_prime(gamma);
    } catch (const Error&) {
        prime = false;
    }
    if (!prime)
        throw Error(Errc::NotPrimeModulus, to_string(gamma) + " is not an Eisenstein prime");
    return decompose(gamma);
}

} // namespace

ExtensionField::ExtensionField(const Eisenstein& gamma, const std::vector<Eisenstein>& f)
    : base_(prime_base(gamma)), base_elems_(residue_system(base_).e_points)
{
    if (f.size() < 2)
        throw Error(Errc::InvalidArgument, "defining polynomial must have degree at least 1");
    for (const auto& c : f)
        f_.push_back(red(c));
    if (f_.back() != red({1, 0}))
        throw Error(Errc::InvalidArgument, "defining polynomial must be monic");
    degree_ = f_.size() - 1;

    order_ = 1;
    for (std::size_t i = 0; i < degree_; ++i)
        order_ = checked::mul(order_, base_.size());

    // A reducible f has a monic factor of degree at most n/2.
    const Int q = static_cast<Int>(base_elems_.size());
    for (std::size_t d = 1; d <= degree_ / 2; ++d) {
        Int count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count = checked::mul(count, q);
        for (Int code = 0; code < count; ++code) {
            std::vector<Eisenstein> g(d + 1);
            Int rest = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = base_elems_[static_cast<std::size_t>(rest % q)];
                rest /= q;
            }
            g[d] = red({1, 0});
            std::vector<Eisenstein> r = f_;
            for (std::size_t k = r.size() - 1; k >= d; --k) {
                const Eisenstein c = r[k];
                for (std::size_t j = 0; j <= d; ++j)
                    r[k - d + j] = red(r[k - d + j] - c * g[j]);
            }
            bool divisible = true;
            for (std::size_t k = 0; k < d; ++k)
                divisible = divisible && r[k].is_zero();
            if (divisible)
                throw Error(Errc::ReduciblePolynomial, "defining polynomial has a factor of degree " + std::to_string(d));
        }
    }
}

ExtensionField::Elem ExtensionField::zero() const { return Elem(degree_, Eisenstein{0, 0}); }

ExtensionField::Elem ExtensionField::one() const { return embed({1, 0}); }

ExtensionField::Elem ExtensionField::generator_x() const
{
    if (degree_ == 1)
        return embed(-f_[0]);
    Elem x = zero();
    x[1] = red({1, 0});
    return x;
}

ExtensionField::Elem ExtensionField::embed(const Eisenstein& c) const
{
    Elem x = zero();
    x[0] = red(c);
    return x;
}

ExtensionField::Elem ExtensionField::add(const Elem& x, const Elem& y) const
{
    Elem out(degree_);
    for (std::size_t i = 0; i < degree_; ++i)
        out[i] = red(x[i] + y[i]);
    return out;
}

ExtensionField::Elem ExtensionField::neg(const Elem& x) const
{
    Elem out(degree_);
    for (std::size_t i = 0; i < degree_; ++i)
        out[i] = red(-x[i]);
    return out;
}

ExtensionField::Elem ExtensionField::mul(const Elem& x, const Elem& y) const
{
    std::vector<Eisenstein> prod(2 * degree_ - 1, Eisenstein{0, 0});
    for (std::size_t i = 0; i < degree_; ++i)
        for (std::size_t j = 0; j < degree_; ++j)
            prod[i + j] = red(prod[i + j] + x[i] * y[j]);
    // X^n = -(f_0 + ... + f_{n-1} X^{n-1})
    for (std::size_t k = prod.size() - 1; k >= degree_; --k) {
        const Eisenstein c = prod[k];
        for (std::size_t j = 0; j <= degree_; ++j)
            prod[k - degree_ + j] = red(prod[k - degree_ + j] - c * f_[j]);
    }
    prod.resize(degree_);
    return prod;
}

ExtensionField::Elem ExtensionField::pow(Elem x, Int e) const
{
    Elem acc = one();
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

ExtensionField::Elem ExtensionField::inverse(const Elem& x) const
{
    if (is_zero(x))
        throw Error(Errc::InvalidArgument, "zero has no inverse");
    return pow(x, order_ - 2);
}

bool ExtensionField::is_zero(const Elem& x) const
{
    for (const auto& c : x)
        if (!c.is_zero())
            return false;
    return true;
}

std::vector<ExtensionField::Elem> ExtensionField::elements() const
{
    const auto q = static_cast<Int>(base_elems_.size());
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (Int code = 0; code < order_; ++code) {
        Elem x(degree_);
        Int rest = code;
        for (std::size_t i = 0; i < degree_; ++i) {
            x[i] = base_elems_[static_cast<std::size_t>(rest % q)];
            rest /= q;
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Int> ExtensionField::element_order(const Elem& x) const
{
    if (is_zero(x))
        return std::nullopt;
    const Elem e = one();
    Elem acc = x;
    for (Int k = 1; k < order_; ++k) {
        if (acc == e)
            return k;
        acc = mul(acc, x);
    }
    return std::nullopt;
}

GroupOrderReport mult_group_order_check(const ExtensionField& field)
{
    GroupOrderReport rep;
    rep.group_order = field.order() - 1;
    for (const auto& x : field.elements()) {
        if (field.is_zero(x))
            continue;
        const auto ord = field.element_order(x);
        if (!ord || rep.group_order % *ord != 0) {
            rep.orders_divide = false;
            continue;
        }
        if (*ord == rep.group_order && !rep.generator)
            rep.generator = x;
    }
    return rep;
}

std::string to_string(const ExtensionField::Elem& x)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.size(); ++i)
        os << (i ? ", " : "") << to_string(x[i]);
    os << ']';
    return os.str();
}

} // namespace eisring
