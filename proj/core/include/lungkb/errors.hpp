#pragma once

#include <stdexcept>
#include <string>

namespace lungkb {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No numeric token with a recognizable unit in a size expression.
class UnparsableSize : public Error {
public:
    using Error::Error;
};

/// chunk_size <= overlap, or otherwise unusable chunking parameters.
class InvalidChunking : public Error {
public:
    using Error::Error;
};

/// Rule id not present in the rule base.
class UnknownRule : public Error {
public:
    using Error::Error;
};

/// Filesystem read/write failure.
class IoFailure : public Error {
public:
    using Error::Error;
};

/// A persisted store or input file violates its format contract.
/// Carries the offending 1-based line number (0 = whole file).
class FormatViolation : public Error {
public:
    FormatViolation(const std::string& message, std::size_t line = 0)
        : Error(line > 0 ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Vectors of unequal dimension passed to a similarity computation.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// All-zero vector passed where a direction is required.
class ZeroVector : public Error {
public:
    using Error::Error;
};

/// A rule, chunk, or query participates in retrieval without an embedding.
class MissingEmbedding : public Error {
public:
    using Error::Error;
};

/// A prompt template slot was left unfilled. Carries the slot name.
class MissingSlot : public Error {
public:
    explicit MissingSlot(const std::string& slot)
        : Error("unfilled prompt slot: " + slot), slot_(slot) {}

    const std::string& slot() const { return slot_; }

private:
    std::string slot_;
};

/// No integer within the expected scale appears in model output.
class ScoreNotFound : public Error {
public:
    using Error::Error;
};

/// Model output does not contain the expected structured payload.
/// Carries the unparseable fragment.
class StructureViolation : public Error {
public:
    explicit StructureViolation(const std::string& message, std::string fragment = "")
        : Error(message), fragment_(std::move(fragment)) {}

    const std::string& fragment() const { return fragment_; }

private:
    std::string fragment_;
};

/// Transient transport-level failure talking to a provider; retryable.
class TransportError : public Error {
public:
    using Error::Error;
};

/// Provider failed permanently (retries exhausted, or a fixture miss).
class ProviderUnavailable : public Error {
public:
    using Error::Error;
};

/// Paired lists of unequal length.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Bad command-line usage or configuration file contents.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace lungkb
