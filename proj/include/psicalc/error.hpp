#pragma once

#include <stdexcept>
#include <string>

namespace psicalc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapMismatch : Error { using Error::Error; };
struct TruncationLoss : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct IndexOutOfCap : Error { using Error::Error; };
struct KExceedsN : Error { using Error::Error; };
struct MissingParameter : Error { using Error::Error; };
struct GuardBandExceeded : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct PsiMismatch : Error { using Error::Error; };
struct NotDegreeLowering : Error { using Error::Error; };
struct ZeroSubdiagonal : Error { using Error::Error; };
struct NotDeltaOperator : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct NotShiftInvariant : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct RootOfUnity : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct BadResidue : Error { using Error::Error; };
struct BadSample : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace psicalc
