#pragma once

#include <stdexcept>
#include <string>

namespace sni {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// galois
struct NotPrime : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InconsistentSystem : Error { using Error::Error; };
struct NotDecodable : Error { using Error::Error; };

// air
struct NotDivisible : Error { using Error::Error; };
struct InvalidDims : Error { using Error::Error; };

// suicp
struct InvalidProblem : Error { using Error::Error; };
struct NotInS : Error { using Error::Error; };

// codec
struct ConditionViolated : Error { using Error::Error; };
struct SingularWindow : Error { using Error::Error; };
struct MissingSideInfo : Error { using Error::Error; };

// file formats
struct SchemaError : Error { using Error::Error; };

} // namespace sni
