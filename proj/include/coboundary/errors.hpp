#pragma once

#include <stdexcept>
#include <string>

namespace coboundary {

// Base of every domain error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DatumMismatch : public Error {
public:
    using Error::Error;
};

// A crystal that is not a disjoint union of highest weight crystals with
// unique extremal elements.
class NotNormalError : public Error {
public:
    using Error::Error;
};

class MalformedGraph : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace coboundary
