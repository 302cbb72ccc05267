#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

// Base class of everything the library throws. Callers that only care about
// "did evaluation succeed" catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class NegativeExponent : public Error {
public:
    using Error::Error;
};

class ZeroProduct : public Error {
public:
    using Error::Error;
};

class InvalidThetaArgument : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class InvalidFamilyParameters : public Error {
public:
    using Error::Error;
};

// Structural problem in a parsed factor, e.g. (q^0;q)_inf.
class InvalidFactor : public Error {
public:
    InvalidFactor(std::size_t position, const std::string &what)
        : Error("at offset " + std::to_string(position) + ": " + what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string &found);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

} // namespace qseries
