#pragma once

#include <stdexcept>
#include <string>

namespace wftq {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AntipodalPoints : Error {
    using Error::Error;
};

struct StepTooLong : Error {
    using Error::Error;
};

struct DegenerateArc : Error {
    using Error::Error;
};

struct TriangleInequalityViolated : Error {
    using Error::Error;
};

struct PerimeterTooLarge : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct DegenerateTriangle : Error {
    using Error::Error;
};

struct NotOnDiagonal : Error {
    using Error::Error;
};

struct NoClassApplicable : Error {
    using Error::Error;
};

struct PatternMismatch : Error {
    using Error::Error;
};

struct InvalidScene : Error {
    using Error::Error;
};

/// Gluing defect kept one sign over the whole interpolation interval.
struct NoRoot : Error {
    NoRoot(const std::string& msg, double defect_lo, double defect_hi)
        : Error(msg), defect_lo(defect_lo), defect_hi(defect_hi) {}
    double defect_lo;
    double defect_hi;
};

}  // namespace wftq
