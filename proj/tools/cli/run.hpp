// Copyright 2026 The rotframe Authors
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

#include <iosfwd>
#include <string>

#include "config.hpp"

namespace rotframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedPoint = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

inline constexpr const char* kTransitionHeader =
    "axis_value,initial_n,initial_l,initial_mu,final_n,final_l,final_mu,W,degenerate_flag";
inline constexpr const char* kIonizationHeader =
    "A_vspm,omega_eV,dressed_index,overlap,E_i_hartree,mu_branch,E_f0_eV,eta,sigma_pia02";

/// Sidecar path for a CSV output.
std::string metadata_path(const std::string& csv_path);

/// Runs the configured job, writing the CSV and its metadata sidecar.
/// Returns kExitOk, kExitFailedPoint if any point failed, or kExitIo.
int run(const RunConfig& config, std::ostream& log);

}  // namespace rotframe::cli
