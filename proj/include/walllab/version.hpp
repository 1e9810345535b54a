// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the walllab authors

/**
 * @file version.hpp
 * @brief Tool version constant stamped into every report.
 */

#pragma once

#include <string_view>

namespace walllab {

/// Semantic version of the library and CLI; reports embed it so that
/// byte-identical output is guaranteed only for a fixed version.
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace walllab
