#pragma once

#include <stdexcept>
#include <string>

namespace ese {

// Error hierarchy shared by all modules. The CLI maps these onto exit codes:
// input/parse/validation problems exit 2, numeric failures exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (non-positive frequency, unknown unit tag, ...).
struct InputError : Error {
    using Error::Error;
};

// Required reference data is missing (unknown element, no defect series, ...).
struct DataError : Error {
    using Error::Error;
};

// A numerical procedure failed (non-convergent or overflowing integration).
struct NumericError : Error {
    using Error::Error;
};

// A document could not be parsed at all.
struct ParseError : Error {
    using Error::Error;
};

// A parsed document violates a record invariant; message names the field/rule.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace ese
