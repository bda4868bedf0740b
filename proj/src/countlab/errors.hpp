#pragma once

#include <stdexcept>
#include <string>

namespace countlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable size guard was exceeded (exit code 3 in the CLI).
struct GuardError : Error {
    using Error::Error;
};

// An oracle query fell outside the declared promise class (exit code 4).
struct PromiseError : Error {
    using Error::Error;
};

// An internal identity that must hold by construction failed, e.g. the
// closed form for the coarsest-fracture coefficient, a non-exact division,
// or a singular interpolation system (exit code 5).
struct ConsistencyError : Error {
    using Error::Error;
};

// Declared class flags violate a known implication between invariants.
struct FlagError : Error {
    using Error::Error;
};

enum class SingularKind { inconsistent, underdetermined };

struct SingularError : Error {
    SingularKind kind;
    SingularError(SingularKind k, const std::string& msg) : Error(msg), kind(k) {}
};

} // namespace countlab
