/*
 * Copyright 2026 The dctapprox Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DCTAPPROX_COMMON_HPP
#define DCTAPPROX_COMMON_HPP

#include <stdexcept>
#include <string>

namespace dctapprox {

/// Arithmetic cost of evaluating a transform: two-input additions or
/// subtractions, multiplications, and power-of-two bit shifts.
struct OpCount {
    int mults = 0;
    int adds = 0;
    int shifts = 0;

    int total() const noexcept { return mults + adds + shifts; }
    bool operator==(const OpCount&) const = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown transform name requested from the catalog.
class CatalogError : public Error {
public:
    using Error::Error;
};

/// Invalid or out-of-range parameter value.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// T * T^t has an off-diagonal entry, so no diagonal rescaling can make the
/// transform orthonormal.
class OrthogonalityError : public Error {
public:
    using Error::Error;
};

/// Image dimensions incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Non-finite or otherwise out-of-domain numeric input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (PGM stream or corpus manifest).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dctapprox

#endif
