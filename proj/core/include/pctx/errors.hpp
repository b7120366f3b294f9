#pragma once

#include <stdexcept>
#include <string>

namespace pctx {

/// Base class for all pctx errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input polyline has zero total length (all points coincide).
class ZeroLengthError : public Error {
public:
  using Error::Error;
};

/// All points of a sequence are identical; normalization is undefined.
class DegenerateTrajectoryError : public Error {
public:
  using Error::Error;
};

/// Context number outside [1..n].
class InvalidLambdaError : public Error {
public:
  using Error::Error;
};

/// Operand dimensions do not match.
class SizeMismatchError : public Error {
public:
  using Error::Error;
};

/// Anchor points are collinear/coplanar beyond the conditioning threshold;
/// trilateration is rank-deficient.
class DegenerateGeometryError : public Error {
public:
  using Error::Error;
};

/// Between-class scatter vanishes (all class means coincide).
class RankDeficientError : public Error {
public:
  using Error::Error;
};

/// An eigendecomposition or factorization failed to converge.
class NumericalFailureError : public Error {
public:
  using Error::Error;
};

/// Iterative solver hit its iteration cap before meeting its tolerance.
class NonConvergenceError : public Error {
public:
  using Error::Error;
};

class InsufficientSamplesError : public Error {
public:
  using Error::Error;
};

class InsufficientClassesError : public Error {
public:
  using Error::Error;
};

/// Cross-validation parameter grid is empty.
class EmptyGridError : public Error {
public:
  using Error::Error;
};

class MissingFileError : public Error {
public:
  using Error::Error;
};

/// Malformed input file; message carries the file and row location.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Directory does not look like a supported dataset layout.
class UnrecognizedLayoutError : public Error {
public:
  using Error::Error;
};

}  // namespace pctx
