#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lcft {

// Every failure mode a public operation can report.  Callers that need to
// react programmatically switch on kind(); the message is for humans.
enum class ErrorKind {
    DomainError,
    PoleEncountered,
    PoleCollision,
    PoleTooClose,
    SubdivisionLimit,
    NonFiniteIntegrand,
    DivergentSequence,
    NonConvergent,
    ConvergenceDomain,
    DegenerateConnection,
    BranchAmbiguity,
    CoincidentPoints,
    IoError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DomainError:          return "DomainError";
        case ErrorKind::PoleEncountered:      return "PoleEncountered";
        case ErrorKind::PoleCollision:        return "PoleCollision";
        case ErrorKind::PoleTooClose:         return "PoleTooClose";
        case ErrorKind::SubdivisionLimit:     return "SubdivisionLimit";
        case ErrorKind::NonFiniteIntegrand:   return "NonFiniteIntegrand";
        case ErrorKind::DivergentSequence:    return "DivergentSequence";
        case ErrorKind::NonConvergent:        return "NonConvergent";
        case ErrorKind::ConvergenceDomain:    return "ConvergenceDomain";
        case ErrorKind::DegenerateConnection: return "DegenerateConnection";
        case ErrorKind::BranchAmbiguity:      return "BranchAmbiguity";
        case ErrorKind::CoincidentPoints:     return "CoincidentPoints";
        case ErrorKind::IoError:              return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind) {}

    Error(ErrorKind kind, std::string msg, std::complex<double> where,
          long n = -1, long m = -1)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind), where_(where), n_(n), m_(m), has_witness_(true) {}

    ErrorKind kind() const noexcept { return kind_; }
    bool has_witness() const noexcept { return has_witness_; }
    std::complex<double> where() const noexcept { return where_; }
    long witness_n() const noexcept { return n_; }
    long witness_m() const noexcept { return m_; }

  private:
    ErrorKind kind_;
    std::complex<double> where_{0.0, 0.0};
    long n_ = -1, m_ = -1;
    bool has_witness_ = false;
};

}  // namespace lcft
