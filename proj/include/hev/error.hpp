#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hev {

enum class ErrorKind {
    Domain,           // argument outside the model's validity range
    InfeasiblePower,  // requested power cannot be realised by the component
    MapValidity,      // coefficient map violates a sign/limit invariant
    Fit,              // least-squares fit is rank deficient
    Arbitration,      // no feasible control interval for the operating point
    Contract,         // caller broke a documented precondition
    BarrierDomain,    // penalty evaluated on or outside the SOC bounds
    Quadratisation,
    Riccati,
    Config,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by bad input files or configuration rather than
/// by a controller failing at run time.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hev
