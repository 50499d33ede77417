// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace adclab {

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotUnitaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadIndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamCountMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadPriorsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivideByZeroError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace adclab
