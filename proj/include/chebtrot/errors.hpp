#pragma once

#include <stdexcept>
#include <string>

namespace chebtrot {

// Bad arguments: wrong shapes, invalid characters, odd orders and so on.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arguments are well formed but the math has no answer there.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Eigenphase too close to the principal-log cut.
struct BranchError : DomainError {
    using DomainError::DomainError;
};

// Tracked ground state stopped being the lowest level.
struct CrossingError : DomainError {
    using DomainError::DomainError;
};

// Request exceeds what the dense desk-scale code supports.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chebtrot
