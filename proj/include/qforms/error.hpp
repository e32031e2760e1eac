#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qf {

// Base class for all errors raised by the library. Callers that need to
// distinguish failure modes catch the concrete subclasses below.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(z)") {}
};

// Violated precondition on a scalar operation (e.g. [n]_p with p in {0,1,-1}).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Evaluation of a rational function at a zero of its (reduced) denominator.
// Carries the offending point so the caller can resample.
struct PoleError : Error {
    mpq_class at;
    explicit PoleError(const mpq_class& point)
        : Error("pole at z = " + point.get_str()), at(point) {}
};

// An internal consistency condition failed (e.g. a rank that the construction
// guarantees did not come out as expected). Signals a transcription bug, not
// bad user input.
struct StructureError : Error {
    explicit StructureError(const std::string& what) : Error(what) {}
};

// A requested computation exceeds the configured size bound. Distinct from
// failure: the caller reports truncation, not a wrong result.
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

} // namespace qf
