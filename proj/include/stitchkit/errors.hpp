#pragma once

#include <stdexcept>
#include <string>

namespace stitchkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotConstant : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct OrderOutOfRange : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct UndefinedAtPoint : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };
struct NewtonDivergence : Error { using Error::Error; };
struct DomainTooLarge : Error { using Error::Error; };
struct FlowDivergence : Error { using Error::Error; };
struct DriftExceeded : Error { using Error::Error; };
struct ReturnSearchFailed : Error { using Error::Error; };
struct ContinuationLost : Error { using Error::Error; };
struct InconclusiveAtResolution : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

} // namespace stitchkit
