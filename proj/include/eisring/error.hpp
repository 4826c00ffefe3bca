#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eisring {

enum class Errc {
    Overflow,
    ZeroModulus,
    BothZero,
    ZeroInput,
    UnitOrZero,
    ZeroIdealGenerator,
    NoSuitableAssociate,
    NotPrimitiveModulus,
    NotAFactorization,
    BadFactorOfT,
    LengthMismatch,
    CardinalityMismatch,
    SpanTooLarge,
    TooFewWords,
    ReduciblePolynomial,
    NotPrimeModulus,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc e) noexcept
{
    switch (e) {
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::UnitOrZero: return "UnitOrZero";
    case Errc::ZeroIdealGenerator: return "ZeroIdealGenerator";
    case Errc::NoSuitableAssociate: return "NoSuitableAssociate";
    case Errc::NotPrimitiveModulus: return "NotPrimitiveModulus";
    case Errc::NotAFactorization: return "NotAFactorization";
    case Errc::BadFactorOfT: return "BadFactorOfT";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CardinalityMismatch: return "CardinalityMismatch";
    case Errc::SpanTooLarge: return "SpanTooLarge";
    case Errc::TooFewWords: return "TooFewWords";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::NotPrimeModulus: return "NotPrimeModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace eisring
