#pragma once

// Linear codes over E_eta and extension fields of E_gamma, both materialized
// at desk scale.

#include <optional>
#include <vector>

#include "eisring/quotient.hpp"

namespace eisring {

using Word = std::vector<Eisenstein>;

struct LinearCode {
    Modulus alphabet;
    std::size_t length = 0;
    std::vector<Word> generators;
    std::vector<Word> codewords; // sorted, components Voronoi-reduced
};

inline constexpr std::size_t default_span_bound = 1'000'000;

/// All E_eta-linear combinations of the generators. Throws LengthMismatch
/// when a generator has the wrong length and SpanTooLarge past the bound.
LinearCode span(const Modulus& alphabet, std::size_t length, const std::vector<Word>& generators,
                std::size_t bound = default_span_bound);

/// Closure under componentwise subtraction mod eta. An empty set is not a group.
bool is_group_code(const std::vector<Word>& words, const Modulus& mod);

enum class CodeMetric { SqEuclid, Hex };

/// Componentwise distance of the reduced difference, summed. Throws
/// TooFewWords below two codewords.
Int code_min_distance(const std::vector<Word>& words, const Modulus& mod, CodeMetric metric);

/// Smallest weight of a nonzero word under the same metric.
std::optional<Int> code_min_weight(const std::vector<Word>& words, const Modulus& mod, CodeMetric metric);

/// E_gamma[X]/<f>. Elements are coefficient vectors of 1, X, ..., X^{n-1}.
class ExtensionField {
public:
    using Elem = std::vector<Eisenstein>;

    /// f is given low degree first and must be monic of degree n >= 1.
    /// Throws NotPrimeModulus, InvalidArgument or ReduciblePolynomial.
    ExtensionField(const Eisenstein& gamma, const std::vector<Eisenstein>& f);

    const Modulus& base() const { return base_; }
    const std::vector<Eisenstein>& base_elements() const { return base_elems_; }
    std::size_t degree() const { return degree_; }
    const std::vector<Eisenstein>& polynomial() const { return f_; }
    Int order() const { return order_; }

    Elem zero() const;
    Elem one() const;
    /// The class of X.
    Elem generator_x() const;
    Elem embed(const Eisenstein& c) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }
    Elem mul(const Elem& x, const Elem& y) const;
    Elem pow(Elem x, Int e) const;
    /// Throws InvalidArgument on zero.
    Elem inverse(const Elem& x) const;
    bool is_zero(const Elem& x) const;

    /// All order() elements, base digits little-endian.
    std::vector<Elem> elements() const;
    /// Multiplicative order of a nonzero element; nullopt if 1 is never reached.
    std::optional<Int> element_order(const Elem& x) const;

private:
    Eisenstein red(const Eisenstein& x) const { return mu_reduce(x, base_); }

    Modulus base_;
    std::vector<Eisenstein> base_elems_;
    std::vector<Eisenstein> f_;
    std::size_t degree_;
    Int order_;
};

struct GroupOrderReport {
    Int group_order = 0;       // |F| - 1
    bool orders_divide = true; // every nonzero order divides group_order
    std::optional<ExtensionField::Elem> generator;
};

GroupOrderReport mult_group_order_check(const ExtensionField& field);

std::string to_string(const ExtensionField::Elem& x);

} // namespace eisring
