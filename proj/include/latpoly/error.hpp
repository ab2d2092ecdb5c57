#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latpoly {

enum class ErrorKind {
    Range,          // coordinate outside the supported window
    Degenerate,     // zero-length segment
    Convexity,      // not strictly convex, or an append would break convexity
    Visibility,     // non-primitive edge
    Duplicate,      // repeated vertex
    Unimodular,     // |det| != 1
    Collinearity,   // points expected on one line are not
    Spacing,        // collinear points are not consecutive lattice points
    UndefinedGcd,   // gcd(0, 0)
    Index,          // edge index out of range
    NotPrimitive,   // apex off the minimal-distance exterior line
    Parameter,      // bad numeric argument
    Instability,    // search bound too small to trust the result
    Parse,          // malformed input file
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace latpoly
