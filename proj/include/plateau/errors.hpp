#pragma once

#include <stdexcept>
#include <string>

namespace plateau {

// Base class for all domain errors raised by the kernel.  The CLI maps
// these to exit code 2 (structural/parse) or 1 (verdict failures).
struct PlateauError : std::runtime_error {
    explicit PlateauError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : PlateauError {
    using PlateauError::PlateauError;
};
struct StructureError : PlateauError {
    using PlateauError::PlateauError;
};
struct OrientabilityError : PlateauError {
    using PlateauError::PlateauError;
};
struct EmbeddingError : PlateauError {
    using PlateauError::PlateauError;
};
struct ResolutionError : PlateauError {
    using PlateauError::PlateauError;
};
struct DegenerateTriangleError : PlateauError {
    using PlateauError::PlateauError;
};
struct FitRankError : PlateauError {
    using PlateauError::PlateauError;
};
struct IncompatibleFieldError : PlateauError {
    using PlateauError::PlateauError;
};
struct RegionUnknownError : PlateauError {
    using PlateauError::PlateauError;
};
struct SolverError : PlateauError {
    using PlateauError::PlateauError;
};
struct EmptySubspaceError : PlateauError {
    using PlateauError::PlateauError;
};
struct ExtentError : PlateauError {
    using PlateauError::PlateauError;
};
struct NotStationaryError : PlateauError {
    using PlateauError::PlateauError;
};
struct StepDivergenceError : PlateauError {
    using PlateauError::PlateauError;
};
struct AngleDegeneracyError : PlateauError {
    using PlateauError::PlateauError;
};
struct ProjectionError : PlateauError {
    using PlateauError::PlateauError;
};
struct NotFlatError : PlateauError {
    using PlateauError::PlateauError;
};
struct UnrecognizedRegionError : PlateauError {
    using PlateauError::PlateauError;
};
struct UnknownCorpusError : PlateauError {
    using PlateauError::PlateauError;
};

}  // namespace plateau
