// Error types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace hlv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// scalars
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "exact division failed") : Error(msg) {}
};
struct PoleAtSpecialization : Error {
    explicit PoleAtSpecialization(const std::string& msg = "denominator vanishes at specialization")
        : Error(msg) {}
};

// partitions / symfunc
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg = "partition sizes do not match") : Error(msg) {}
};
struct ZeroArgument : Error {
    ZeroArgument() : Error("argument must be nonzero") {}
};
struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& msg = "degree exceeds configured cap") : Error(msg) {}
};
struct UnsupportedLeaf : Error {
    explicit UnsupportedLeaf(const std::string& msg) : Error(msg) {}
};
struct ConstantTermPresent : Error {
    ConstantTermPresent() : Error("series has a T^0 term") {}
};
struct BadConstantTerm : Error {
    BadConstantTerm() : Error("series constant term is not 1") {}
};

// macdonald
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error(msg) {}
};
struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& which) : Error("axiom violated: " + which) {}
};

// hlv
struct IntegralityFailure : Error {
    explicit IntegralityFailure(const std::string& msg) : Error(msg) {}
};
struct NegativeDimension : Error {
    explicit NegativeDimension(const std::string& msg) : Error(msg) {}
};

// seriesalg
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg = "power series precision exhausted")
        : Error(msg) {}
};
struct NotNilpotent : Error {
    NotNilpotent() : Error("matrix is not nilpotent to working precision") {}
};

// oracle
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg = "enumeration exceeds the hard cap") : Error(msg) {}
};

} // namespace hlv
