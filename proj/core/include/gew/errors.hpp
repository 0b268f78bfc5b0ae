#pragma once

#include <stdexcept>
#include <string>

namespace gew {

/// Argument outside the mathematical domain of an operation (e.g. eta not in [0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a documented precondition: mismatched lengths, bad index, foreign mesh.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid experiment or solver configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero (or numerically negligible) pivot during the banded factorisation.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gew
