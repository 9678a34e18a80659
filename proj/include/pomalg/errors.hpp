// Copyright 2026 The pomalg developers
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

namespace pomalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input shapes/dimensions do not match.
struct ShapeError : Error {
    using Error::Error;
};

/// A matrix required to be Hermitian is not.
struct HermiticityError : Error {
    using Error::Error;
};

/// A matrix required to be positive semidefinite has a negative eigenvalue
/// beyond the positivity slack.
struct PositivityError : Error {
    using Error::Error;
};

/// A candidate Gram matrix is not embeddable (negative eigenvalue).
struct NotAGramError : Error {
    using Error::Error;
};

/// Eigensolver failure or an internal dual-route consistency check failed.
struct NumericsError : Error {
    using Error::Error;
};

/// A scalar function produced a non-finite value on an outcome.
struct DomainError : Error {
    using Error::Error;
};

/// An operation requiring non-redundant input received a redundant POM.
struct RedundancyError : Error {
    using Error::Error;
};

/// Common-element matching was ambiguous (multiple candidates within
/// tolerance).
struct MatchError : Error {
    using Error::Error;
};

/// The A-route and B-route back-projections from the joint space disagree.
struct RouteMismatchError : Error {
    using Error::Error;
};

/// Phase-grid resolution below the Fock truncation (completeness would fail).
struct AliasError : Error {
    using Error::Error;
};

/// Malformed input document; message carries a JSON-pointer-style path.
struct FormatError : Error {
    using Error::Error;
};

/// An operation requiring a valid POM or normalised state received one that
/// fails its invariants.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace pomalg
