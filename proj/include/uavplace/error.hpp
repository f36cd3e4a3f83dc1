// SPDX-License-Identifier: Apache-2.0
//
// uavplace - simultaneous placement of multiple UAV base stations
// Copyright (C) 2026 The uavplace authors
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

#ifndef UAVPLACE_ERROR_HPP
#define UAVPLACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace uavplace
{

enum class ErrorKind
{
    EmptyGrid,
    DegenerateLink,
    EmptyPathSet,
    ZeroChannel,
    IndexOutOfRange,
    Infeasible,
    NumericalFailure,
    ParseError,
    ValidationError,
    IoError,
    InvalidArgument
};

inline constexpr std::string_view to_string(ErrorKind k) noexcept
{
    switch (k)
    {
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::DegenerateLink: return "DegenerateLink";
    case ErrorKind::EmptyPathSet: return "EmptyPathSet";
    case ErrorKind::ZeroChannel: return "ZeroChannel";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// All library failures are reported through this exception; kind() identifies the failure class.
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace uavplace

#endif
