// Copyright 2026 The spincat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace spincat {

/// Odd cat state with coincident branches: the normalization diverges.
class DegenerateCat : public std::invalid_argument {
public:
    explicit DegenerateCat(const std::string& what) : std::invalid_argument(what) {}
};

/// Input superposition with vanishing (or negative) squared norm.
class DegenerateTarget : public std::invalid_argument {
public:
    explicit DegenerateTarget(const std::string& what) : std::invalid_argument(what) {}
};

/// Conditional state requested on a measurement branch of ~zero probability.
class ZeroBranch : public std::invalid_argument {
public:
    explicit ZeroBranch(const std::string& what) : std::invalid_argument(what) {}
};

/// Repetition depth beyond the enumeration guard.
class TreeTooDeep : public std::invalid_argument {
public:
    explicit TreeTooDeep(const std::string& what) : std::invalid_argument(what) {}
};

/// No closed-form average fidelity is available at this attempt depth.
class UnsupportedDepth : public std::invalid_argument {
public:
    explicit UnsupportedDepth(const std::string& what) : std::invalid_argument(what) {}
};

/// The required repetition count diverges (zero success probability).
class InfiniteRepetitions : public std::domain_error {
public:
    explicit InfiniteRepetitions(const std::string& what) : std::domain_error(what) {}
};

/// Coherent-basis change requested where the two branches coincide (p = 1).
class SingularBasis : public std::invalid_argument {
public:
    explicit SingularBasis(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed sweep specification.
class InvalidSpec : public std::invalid_argument {
public:
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace spincat
