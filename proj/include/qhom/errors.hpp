#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

// Bad user input: syntax errors, unknown names, out-of-range parameters.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated hypothesis of a construction does not hold for the given data.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed.  Always a bug, never user error.
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void verify(bool ok, const std::string& what) {
    if (!ok) throw VerifyError(what);
}

} // namespace qhom
