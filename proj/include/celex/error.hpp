// Copyright 2026 The celex Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace celex {

enum class ErrorCode {
    NonFinite,
    GapTooLarge,
    SizeMismatch,
    DimensionMismatch,
    NotUnitary,
    EigensolverFailure,
    BranchCut,
    TooFarApart,
    PerturbationFailed,
    AmbiguousMatching,
    EpsOutOfRange,
    InadmissibleStage,
    OffsetCollision,
    BranchNotFound,
    InvalidArgument,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::GapTooLarge: return "GapTooLarge";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::TooFarApart: return "TooFarApart";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::AmbiguousMatching: return "AmbiguousMatching";
    case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::InadmissibleStage: return "InadmissibleStage";
    case ErrorCode::OffsetCollision: return "OffsetCollision";
    case ErrorCode::BranchNotFound: return "BranchNotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `name()` is the stable identifier
/// printed by the CLI.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::string_view name() const noexcept { return to_string(code_); }

  private:
    ErrorCode code_;
};

/// Raised by branch tracking when a grid step cannot be matched even after
/// bisection. Carries the offending coarse node.
class AmbiguousMatchingError : public Error {
  public:
    enum class Axis { s, t };

    AmbiguousMatchingError(Axis axis, std::size_t s_index, std::size_t t_index,
                           const std::string &what)
        : Error(ErrorCode::AmbiguousMatching, what), axis_(axis), s_index_(s_index),
          t_index_(t_index)
    {
    }

    [[nodiscard]] Axis axis() const noexcept { return axis_; }
    [[nodiscard]] std::size_t s_index() const noexcept { return s_index_; }
    [[nodiscard]] std::size_t t_index() const noexcept { return t_index_; }

  private:
    Axis axis_;
    std::size_t s_index_;
    std::size_t t_index_;
};

#define CELEX_FAIL_IF(cond, code, msg)                                                            \
    do {                                                                                           \
        if (cond) {                                                                                \
            throw ::celex::Error((code), (msg));                                                   \
        }                                                                                          \
    } while (0)

} // namespace celex
