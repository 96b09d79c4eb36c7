#pragma once

#include <stdexcept>
#include <string>

namespace rufpp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flow endpoints or size are malformed for the path.
class InvalidFlowError : public Error {
public:
    using Error::Error;
};

/// Flow size exceeds its bottleneck capacity; no round can carry it.
class InfeasibleFlowError : public Error {
public:
    using Error::Error;
};

/// A flow was handed to a pipeline whose size class it does not belong to.
class ClassificationError : public Error {
public:
    using Error::Error;
};

/// A rectangle meets no representative line, or more than the set allows.
class SparsityError : public Error {
public:
    using Error::Error;
};

/// Schedule does not cover exactly the given flows.
class ScheduleStructureError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

/// Exact solver input above its configured size limit.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace rufpp
