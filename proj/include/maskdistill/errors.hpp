#pragma once

#include <stdexcept>
#include <string>

namespace maskdistill {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// text
struct PairTooShort : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};
struct MalformedRecord : Error {
    MalformedRecord(const std::string& path, long line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": malformed record: " + what), line_number(line) {}
    long line_number;
};

// acquisition
struct MissingSlot : Error {
    using Error::Error;
};
struct MissingStyleTag : Error {
    using Error::Error;
};
struct TeacherUnreachable : Error {
    using Error::Error;
};

// analyzers
struct EmptyCorpus : Error {
    using Error::Error;
};

// masking / model
struct LengthMismatch : Error {
    using Error::Error;
};
struct NonFiniteInput : Error {
    using Error::Error;
};
struct OutOfVocab : Error {
    using Error::Error;
};
struct SequenceTooLong : Error {
    using Error::Error;
};

// training
struct ShapeMismatch : Error {
    using Error::Error;
};
struct NonFiniteGradient : Error {
    using Error::Error;
};
struct EmptyScope : Error {
    using Error::Error;
};
struct EmptySplit : Error {
    using Error::Error;
};
struct TrainingDiverged : Error {
    using Error::Error;
};

// config / CLI
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace maskdistill
