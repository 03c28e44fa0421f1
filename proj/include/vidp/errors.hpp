#pragma once

#include <stdexcept>
#include <string>

namespace vidp {

// Base for every error the library raises. Each subclass corresponds to one
// failure category that callers (CLI exit codes, HTTP status codes) branch on.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateData : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegenerateRange : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidRegion : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class MissingColumn : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace vidp
