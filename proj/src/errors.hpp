#pragma once

#include <stdexcept>
#include <string>

namespace dbsim {

// Error taxonomy mirrors the process exit codes: config=2, convergence=3,
// blowup=4, capacity=5.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int code() const { return 1; }
};

class ConfigError : public Error {
public:
    using Error::Error;
    int code() const override { return 2; }
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    int code() const override { return 3; }
};

class BlowupError : public Error {
public:
    using Error::Error;
    int code() const override { return 4; }
};

class CapacityError : public Error {
public:
    using Error::Error;
    int code() const override { return 5; }
};

// Shape/domain misuse (grid mismatch, invalid argument ranges).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace dbsim
