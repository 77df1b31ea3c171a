#pragma once

#include <stdexcept>
#include <string>

namespace obl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / geometry
struct InvalidPolygon : Error { using Error::Error; };
struct DegenerateIntersection : Error { using Error::Error; };
struct ConvexityError : Error { using Error::Error; };

// Tangent map domain
struct SingularPoint : Error { using Error::Error; };
struct InteriorPoint : Error { using Error::Error; };
struct NoPinwheelForm : Error { using Error::Error; };

// Cross-validation
struct ConsistencyError : Error { using Error::Error; };

// Digital filter / piecewise rotations
struct OutOfRange : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// Symbolic dynamics
struct AlphabetError : Error { using Error::Error; };
struct AddressError : Error { using Error::Error; };

// Misc
struct UnsupportedComposite : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace obl
