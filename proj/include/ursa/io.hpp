// Copyright 2026 The ursa developers.
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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ursa/bounds.hpp"
#include "ursa/measurement.hpp"
#include "ursa/sampling.hpp"
#include "ursa/witness.hpp"

namespace ursa {

/// Matrices travel as {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

Matrix load_matrix(const std::filesystem::path& path);
DensityMatrix load_density(const std::filesystem::path& path,
                           const Tolerances& tol = default_tolerances());
HermitianObservable load_observable(const std::filesystem::path& path,
                                    const Tolerances& tol = default_tolerances());

/// Model files carry the keys rho, rho_app, U, A, B, A_app, B_app, each a
/// matrix object.
MeasurementModel load_model(const std::filesystem::path& path,
                            const Tolerances& tol = default_tolerances());

nlohmann::json report_to_json(const BoundReport& report);
nlohmann::json report_to_json(const ErrorDisturbanceReport& report);

/// Shortest round-trip decimal form.
std::string format_double(double value);

std::string sweep_csv_header();
std::string sweep_csv_row(const PuritySweepRow& row);

}  // namespace ursa
