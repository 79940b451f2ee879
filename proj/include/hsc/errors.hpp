#ifndef HSC_ERRORS_HPP
#define HSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsc {

// Malformed input files or text formats.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical property that was supposed to hold did not.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of its node budget before finishing.
// Distinct from a negative mathematical result.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hsc

#endif
