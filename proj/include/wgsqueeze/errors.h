// Copyright 2026 The wgsqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WGSQUEEZE_ERRORS_H
#define WGSQUEEZE_ERRORS_H

#include <stdexcept>
#include <string>

namespace wgs {

/// The mean spin vanishes (GHZ-like input), so xi_2 is undefined.
struct SingularMeanSpinError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A closed-form denominator is numerically zero.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The A = B = 0 point of the fully-connected formulas with the limit convention disabled.
struct IndeterminateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense state or density matrix would exceed the memory guard.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

/// Regression input with fewer than three points or a single distinct abscissa.
struct DegenerateFitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Decohered-GHZ baseline requested at gamma*t = 0.
struct UndefinedBaselineError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace wgs

#endif
