// SPDX-License-Identifier: Apache-2.0
//
// astars-noma: link-level analysis of active STAR-surface assisted NOMA downlinks
// Copyright (C) 2026 The astars-noma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace astars
{
    // Base class of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Argument outside the mathematical domain of a function.
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    // Invalid configuration, sweep specification or infeasible power budget.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    // A computed probability or rate violated its range; indicates a formula bug.
    class NumericIntegrityError : public Error
    {
    public:
        using Error::Error;
    };

    // High-SNR expression evaluated outside the regime where it is a probability.
    class OutOfRegimeError : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}
