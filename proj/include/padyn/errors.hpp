#ifndef PADYN_ERRORS_HPP
#define PADYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padyn {

/// Base of every failure raised by the library. The CLI maps the concrete
/// subclasses onto exit codes, so new errors should derive from one of the
/// three families below rather than from Error directly.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad expression, bad matrix file, precondition violated
/// by the caller.
class InputError : public Error {
  public:
    using Error::Error;
};

/// The map under analysis does not have the property an operation needs
/// (not a self-map, contracting, not realizable, ...).
class AnalysisError : public Error {
  public:
    using Error::Error;
};

/// A finite resource ran out: p-adic precision, search depth, degree cap.
class LimitError : public Error {
  public:
    using Error::Error;
};

class ParseError : public InputError {
  public:
    using InputError::InputError;
};

class NotStochastic : public InputError {
  public:
    using InputError::InputError;
};

class NotStationary : public InputError {
  public:
    using InputError::InputError;
};

class NegativeEntry : public InputError {
  public:
    using InputError::InputError;
};

class StateLimitExceeded : public InputError {
  public:
    using InputError::InputError;
};

class NotIntegral : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class NotSelfMap : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class ContractionDetected : public AnalysisError {
  public:
    ContractionDetected(const std::string &what, unsigned depth, std::string residue)
        : AnalysisError(what), depth_(depth), residue_(std::move(residue)) {}

    /// The offending coset is residue mod p^depth.
    unsigned depth() const { return depth_; }
    const std::string &residue() const { return residue_; }

  private:
    unsigned depth_;
    std::string residue_;
};

class NotLocallyScaling : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class NotRealizable : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class InsufficientPrecision : public LimitError {
  public:
    using LimitError::LimitError;
};

class RealizationDepthExceeded : public LimitError {
  public:
    using LimitError::LimitError;
};

/// Two computations that must agree by theory did not. Always a bug.
class InternalInconsistency : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace padyn

#endif
