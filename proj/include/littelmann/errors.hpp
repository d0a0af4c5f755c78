#pragma once

#include <stdexcept>

namespace littelmann {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input matrix is not a generalized Cartan matrix.
struct NotGCM : Error {
    using Error::Error;
};
struct NotSymmetrizable : Error {
    using Error::Error;
};
struct RankMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
// Root enumeration over an infinite root system needs a height cutoff.
struct CutoffRequired : Error {
    using Error::Error;
};
// Weight could not be brought into the dominant chamber (outside the
// Tits cone, or the iteration cap was hit).
struct IterationCapExceeded : Error {
    using Error::Error;
};
struct NotIntegral : Error {
    using Error::Error;
};
struct NonTerminating : Error {
    using Error::Error;
};
struct NotFiniteType : Error {
    using Error::Error;
};
struct NotDominant : Error {
    using Error::Error;
};
struct LambdaNotDominant : Error {
    using Error::Error;
};
struct CaseInvalid : Error {
    using Error::Error;
};
struct BetaNotSimple : Error {
    using Error::Error;
};
struct ZeroString : Error {
    using Error::Error;
};
struct VerificationFailed : Error {
    using Error::Error;
};

}  // namespace littelmann
