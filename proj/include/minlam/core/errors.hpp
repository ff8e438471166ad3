#pragma once

#include <stdexcept>
#include <string>

namespace minlam {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class NonFiniteField : public Error {
public:
    using Error::Error;
};

class DomainViolation : public Error {
public:
    using Error::Error;
};

class UnsupportedData : public Error {
public:
    using Error::Error;
};

class ZeroDensity : public Error {
public:
    using Error::Error;
};

class EndpointMismatch : public Error {
public:
    using Error::Error;
};

class PoleHit : public Error {
public:
    using Error::Error;
};

class RootNotBracketed : public Error {
public:
    using Error::Error;
};

class DecompositionFailure : public Error {
public:
    using Error::Error;
};

class SinkFailure : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

}  // namespace minlam
