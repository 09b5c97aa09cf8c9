#pragma once

#include <stdexcept>
#include <string>

namespace strongsidon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// base_arith
struct BasisTooShort : Error { using Error::Error; };
struct InvalidDigit : Error { using Error::Error; };
struct NotInAnyBand : Error { using Error::Error; };

// prime_tools
struct InvalidC : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NoLogarithm : Error { using Error::Error; };

// construction
struct PrimeCollision : Error { using Error::Error; };

// verification
struct TooLarge : Error { using Error::Error; };
struct ElementOutOfRange : Error { using Error::Error; };
struct NotConstructedElements : Error { using Error::Error; };

// random_sets
struct NotFound : Error { using Error::Error; };
struct ParamMismatch : Error { using Error::Error; };

// analysis
struct InsufficientData : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };

}  // namespace strongsidon
