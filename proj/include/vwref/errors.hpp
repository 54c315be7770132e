#pragma once

#include <stdexcept>
#include <string>

namespace vw {

/// Base class for all computation errors raised by the engine.
struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

// scalar
struct PoleAtOne : CalcError {
    explicit PoleAtOne(const std::string& msg) : CalcError(msg) {}
};
struct ParamDenominator : CalcError {
    explicit ParamDenominator(const std::string& msg) : CalcError(msg) {}
};
struct UndeclaredParameter : CalcError {
    explicit UndeclaredParameter(const std::string& msg) : CalcError(msg) {}
};

// cohring
struct NonNilpotent : CalcError {
    explicit NonNilpotent(const std::string& msg) : CalcError(msg) {}
};
struct DimensionTooLarge : CalcError {
    explicit DimensionTooLarge(const std::string& msg) : CalcError(msg) {}
};
struct NotInvertible : CalcError {
    explicit NotInvertible(const std::string& msg) : CalcError(msg) {}
};
struct MixedRings : CalcError {
    explicit MixedRings(const std::string& msg) : CalcError(msg) {}
};

// eqkth / localize
struct ZeroWeightDenominator : CalcError {
    explicit ZeroWeightDenominator(const std::string& msg) : CalcError(msg) {}
};
struct ResidualTau : CalcError {
    explicit ResidualTau(const std::string& msg) : CalcError(msg) {}
};
struct NonLineAtom : CalcError {
    explicit NonLineAtom(const std::string& msg) : CalcError(msg) {}
};

// lambdaring
struct RankOrder : CalcError {
    explicit RankOrder(const std::string& msg) : CalcError(msg) {}
};

// qseries
struct OrderTooLow : CalcError {
    explicit OrderTooLow(const std::string& msg) : CalcError(msg) {}
};

// wallcross
struct MissingCharge : CalcError {
    explicit MissingCharge(const std::string& msg) : CalcError(msg) {}
};
struct DivisionByZeroQuantum : CalcError {
    explicit DivisionByZeroQuantum(const std::string& msg) : CalcError(msg) {}
};

// scencli
struct ParseError : CalcError {
    explicit ParseError(const std::string& msg) : CalcError(msg) {}
};
struct UnknownScenario : CalcError {
    explicit UnknownScenario(const std::string& msg) : CalcError(msg) {}
};
struct MissingBinding : CalcError {
    explicit MissingBinding(const std::string& msg) : CalcError(msg) {}
};

} // namespace vw
