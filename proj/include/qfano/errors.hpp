#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfano {

/// Base of every domain error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_core
struct TruncationError : Error { using Error::Error; };

// wps
struct NotFano : Error { using Error::Error; };
struct NotQuasiSmoothAtVertex : Error { using Error::Error; };
struct EdgeContained : Error { using Error::Error; };
struct NotGeneral : Error { using Error::Error; };
struct NotTerminalIsolated : Error { using Error::Error; };

// riemann_roch
struct ConventionError : Error { using Error::Error; };
struct CalibrationError : Error { using Error::Error; };
struct InconsistentSeries : Error { using Error::Error; };

// sarkisov
struct Infeasible : Error { using Error::Error; };
struct Undefined : Error { using Error::Error; };
struct InvalidIndex : Error { using Error::Error; };

// normal_form
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct UnknownVariable : Error { using Error::Error; };
struct GradingError : Error { using Error::Error; };
struct SeriesExceedsFreeAlgebra : Error { using Error::Error; };

struct MissingCornerMonomial : Error {
    explicit MissingCornerMonomial(std::string mono)
        : Error("missing corner monomial " + mono), monomial(std::move(mono)) {}
    std::string monomial;
};

}  // namespace qfano
