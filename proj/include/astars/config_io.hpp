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

#include "astars/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace astars::cli
{
    // Reads `key = value` lines ('#' starts a comment); absent keys keep their defaults.
    // dB/dBm keys are converted to linear units here and nowhere else.
    model::NetworkConfig parse_config(const std::filesystem::path &path);
    model::NetworkConfig parse_config_text(std::string_view text, std::string_view source = "<config>");

    // Applies a single key/value pair without validating the result.
    void apply_setting(model::NetworkConfig &cfg, std::string_view key, std::string_view value);

    // Renders the configuration in the same format parse_config reads.
    std::string format_config(const model::NetworkConfig &cfg);
}
