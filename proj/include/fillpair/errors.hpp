#pragma once

#include <stdexcept>
#include <string>

namespace fillpair {

// Base for all contract violations raised by the engine.  Input errors
// (bad files, bad gluings) and precondition failures both land here so
// the CLI can map them to exit code 2 uniformly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex
struct BigonFaceError : Error { using Error::Error; };
struct DisconnectedComplexError : Error { using Error::Error; };
struct NonOrientableGluingError : Error { using Error::Error; };
struct GenusBelowTwoError : Error { using Error::Error; };

// diagram / scene
struct EmbeddingViolation : Error { using Error::Error; };
struct DanglingPort : Error { using Error::Error; };
struct UnknownCurve : Error { using Error::Error; };
struct ArcNotEmbedded : Error { using Error::Error; };
struct FaceIsRectangle : Error { using Error::Error; };

// twist
struct NotMinimalPosition : Error { using Error::Error; };

// buckets
struct SameBucket : Error { using Error::Error; };
struct KindMismatch : Error { using Error::Error; };

// distance
struct InessentialCurve : Error { using Error::Error; };
struct PathBroken : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InconsistentEvidence : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

} // namespace fillpair
