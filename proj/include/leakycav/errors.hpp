// errors.hpp - exception hierarchy shared by all leakycav components.

#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace leakycav {

// Base class so callers can catch any library error in one handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A level index or matrix dimension is out of range for its subsystem.
struct DimensionError : Error {
    using Error::Error;
};

// Tensor composition or operator embedding with incompatible spaces
// (duplicate labels, missing target subsystem).
struct CompositionError : Error {
    using Error::Error;
};

// Invalid argument value (empty keep-set, unknown label, bad state data).
struct ArgumentError : Error {
    using Error::Error;
};

// Invalid configuration (couplings, dissipation map, integrator step,
// sweep parameters).
struct ConfigurationError : Error {
    using Error::Error;
};

// Numerical failure at run time; carries the evolution time at which it
// occurred when that is meaningful (NaN otherwise).
struct NumericalError : Error {
    explicit NumericalError(const std::string& message,
                            double at_time = std::numeric_limits<double>::quiet_NaN())
        : Error(message), time(at_time) {}
    double time;
};

// Two supposedly equivalent computation routes disagree.
struct ConsistencyError : Error {
    using Error::Error;
};

// A closed-form matrix assembly violated its structural guarantees
// (e.g. Hermiticity of a secular-form density matrix).
struct AssemblyError : Error {
    using Error::Error;
};

}  // namespace leakycav
