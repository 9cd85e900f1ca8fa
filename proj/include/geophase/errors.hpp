#pragma once

#include <stdexcept>
#include <string>

namespace geophase {

/// Any failure raised by the numerical core. The CLI maps it to exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidParameter : public DomainError {
public:
    using DomainError::DomainError;
};

/// The operator is defective: eigenvalues and eigenvectors coalesce (gamma = 1 for the dimer).
class ExceptionalPoint : public DomainError {
public:
    using DomainError::DomainError;
};

/// PT symmetry is spontaneously broken (gamma > 1); unbroken-phase formulas do not apply.
class BrokenPhase : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateSpectrum : public DomainError {
public:
    using DomainError::DomainError;
};

class NonPositiveRate : public DomainError {
public:
    using DomainError::DomainError;
};

/// The real part B of the Hamiltonian is not invertible, so no second-order form exists.
class SingularB : public DomainError {
public:
    using DomainError::DomainError;
};

class StepTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

class WrongRepresentation : public DomainError {
public:
    using DomainError::DomainError;
};

class ScaleSeparationViolated : public DomainError {
public:
    using DomainError::DomainError;
};

class UnexpectedResistor : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed run specification (exit code 2).
class SpecParseError : public std::runtime_error {
public:
    explicit SpecParseError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written (exit code 4).
class IOError : public std::runtime_error {
public:
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geophase
