#pragma once

#include <stdexcept>
#include <string>

namespace dualvar {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between scalars of different fields (Q vs F_p, or distinct primes).
struct field_mismatch_error : error {
    using error::error;
};

// Division by zero, non-invertible element, singular matrix where invertibility required.
struct division_error : error {
    using error::error;
};

// Malformed input (polynomial text, partitions, catalog specs). Carries position info
// when it comes from the text parser.
struct parse_error : error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int ln, int col)
        : error(msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Precondition violation on an operation (wrong sizes, degree out of range, ...).
struct invalid_input_error : error {
    using error::error;
};

// A reduction mod p hit a vanishing denominator / vanishing polynomial: the prime is
// unusable for this input and the caller should retry at a larger prime.
struct unlucky_prime_error : error {
    using error::error;
};

// Randomized sampling ran out of retries without finding a suitable point/flag.
struct sampling_exhausted_error : error {
    using error::error;
};

// A chosen line/flag puts the input in bad position (e.g. leading coefficient of the
// divisor vanishes on L); the caller should resample coordinates.
struct coordinate_error : error {
    using error::error;
};

} // namespace dualvar
