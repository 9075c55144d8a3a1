#ifndef GROUPCHAR_ERRORS_HPP
#define GROUPCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace groupchar {

// Bad user input (malformed tables, words, descriptors, non-characters).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded before any heavy work started.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller broke an API precondition (mismatched ambient dimensions, etc.).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace groupchar

#endif
