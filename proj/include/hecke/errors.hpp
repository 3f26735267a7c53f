#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorKind {
    InvalidParameter,
    InvalidGenerator,
    Domain,
    NoBound,
    SideConditionViolated,
    BoundUnavailable,
    OracleFailure,
    NoRoot,
    InfeasibleSearch,
    Data,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidGenerator: return "invalid-generator";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::NoBound: return "no-bound";
    case ErrorKind::SideConditionViolated: return "side-condition-violated";
    case ErrorKind::BoundUnavailable: return "bound-unavailable";
    case ErrorKind::OracleFailure: return "oracle-failure";
    case ErrorKind::NoRoot: return "no-root";
    case ErrorKind::InfeasibleSearch: return "infeasible-search";
    case ErrorKind::Data: return "data";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hecke
