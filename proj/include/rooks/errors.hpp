#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rooks {

enum class ErrorKind {
    invalid_argument,
    resource_limit,
    verification_failed,
    internal_consistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error(ErrorKind::resource_limit, what) {}
};

struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& what) : Error(ErrorKind::verification_failed, what) {}
};

// Raised when an exact computation produces something that can only be a bug
// (non-integral interpolant, non-monic characteristic polynomial, ...).
struct InternalConsistencyError : Error {
    explicit InternalConsistencyError(const std::string& what) : Error(ErrorKind::internal_consistency, what) {}
};

/// Enumeration and state-space caps. Every enumerating routine takes one of
/// these and fails with ResourceLimit instead of truncating.
struct Limits {
    std::uint64_t max_states = std::uint64_t{1} << 20;
    std::uint64_t max_enum = 10'000'000;
    int max_partition_size = 12;
};

}  // namespace rooks
