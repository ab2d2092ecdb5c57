#include "latpoly/error.hpp"

namespace latpoly {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Range: return "range";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Convexity: return "convexity";
        case ErrorKind::Visibility: return "visibility";
        case ErrorKind::Duplicate: return "duplicate";
        case ErrorKind::Unimodular: return "unimodular";
        case ErrorKind::Collinearity: return "collinearity";
        case ErrorKind::Spacing: return "spacing";
        case ErrorKind::UndefinedGcd: return "undefined-gcd";
        case ErrorKind::Index: return "index";
        case ErrorKind::NotPrimitive: return "not-primitive";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Instability: return "instability";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace latpoly
