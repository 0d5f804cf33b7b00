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

#include "ursa/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ursa {

namespace {

using nlohmann::json;

json real_part_rows(const Matrix& m, bool imaginary) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double number_at(const json& row, Eigen::Index j, const char* key) {
  const json& cell = row.at(static_cast<std::size_t>(j));
  if (!cell.is_number()) {
    throw ParseError(std::string("matrix: '") + key +
                     "' entries must be numbers");
  }
  const double v = cell.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("matrix: '") + key +
                     "' entries must be finite");
  }
  return v;
}

void fill_part(Matrix& m, const json& part, const char* key, bool imaginary) {
  if (!part.is_array() || part.size() != static_cast<std::size_t>(m.rows())) {
    throw ParseError(std::string("matrix: '") + key +
                     "' must be an array of dim rows");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const json& row = part.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(m.cols())) {
      throw ParseError(std::string("matrix: '") + key +
                       "' rows must have dim entries");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = number_at(row, j, key);
      if (imaginary) {
        m(i, j) += Complex(0.0, v);
      } else {
        m(i, j) += Complex(v, 0.0);
      }
    }
  }
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Re-raises semantic construction failures with the file as context.
[[noreturn]] void rethrow_with_path(const std::filesystem::path& path,
                                    const Error& e) {
  throw ValidationError(path.string() + ": " + e.what());
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json j;
  j["dim"] = m.rows();
  j["re"] = real_part_rows(m, false);
  j["im"] = real_part_rows(m, true);
  return j;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
      !j.contains("im")) {
    throw ParseError("matrix: expected an object with keys dim, re, im");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    throw ParseError("matrix: 'dim' must be a positive integer");
  }
  const Eigen::Index d = j["dim"].get<Eigen::Index>();
  Matrix m = Matrix::Zero(d, d);
  fill_part(m, j["re"], "re", false);
  fill_part(m, j["im"], "im", true);
  return m;
}

Matrix load_matrix(const std::filesystem::path& path) {
  try {
    return matrix_from_json(parse_file(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw ParseError(path.string() + ": " + what);
  }
}

DensityMatrix load_density(const std::filesystem::path& path,
                           const Tolerances& tol) {
  const Matrix m = load_matrix(path);
  try {
    return DensityMatrix(m, tol);
  } catch (const Error& e) {
    rethrow_with_path(path, e);
  }
}

HermitianObservable load_observable(const std::filesystem::path& path,
                                    const Tolerances& tol) {
  const Matrix m = load_matrix(path);
  try {
    return HermitianObservable(m, tol);
  } catch (const Error& e) {
    rethrow_with_path(path, e);
  }
}

MeasurementModel load_model(const std::filesystem::path& path,
                            const Tolerances& tol) {
  const json j = parse_file(path);
  const auto field = [&](const char* key) -> Matrix {
    if (!j.is_object() || !j.contains(key)) {
      throw ParseError(path.string() + ": missing model key '" + key + "'");
    }
    try {
      return matrix_from_json(j[key]);
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": key '" + key + "': " + e.what());
    }
  };
  try {
    return MeasurementModel(
        DensityMatrix(field("rho"), tol), DensityMatrix(field("rho_app"), tol),
        field("U"), HermitianObservable(field("A"), tol),
        HermitianObservable(field("B"), tol),
        HermitianObservable(field("A_app"), tol),
        HermitianObservable(field("B_app"), tol), tol);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    rethrow_with_path(path, e);
  }
}

json report_to_json(const BoundReport& report) {
  json j;
  j["kind"] = std::string(relation_name(report.kind));
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  j["holds"] = report.holds;
  j["terms"] = json::object();
  for (const auto& [key, value] : report.terms) j["terms"][key] = value;
  return j;
}

namespace {

json verdict_to_json(const InequalityVerdict& v) {
  json j;
  j["lhs"] = v.lhs;
  j["rhs_classical"] = v.rhs_classical;
  j["rhs_generalized"] = v.rhs_generalized;
  j["classical_holds"] = v.classical_holds;
  j["generalized_holds"] = v.generalized_holds;
  return j;
}

}  // namespace

json report_to_json(const ErrorDisturbanceReport& report) {
  json j;
  j["eps_a"] = report.eps_a;
  j["eps_b"] = report.eps_b;
  j["eta_b"] = report.eta_b;
  j["sigma_a"] = report.sigma_a;
  j["sigma_b"] = report.sigma_b;
  j["commutator_term"] = report.commutator_term;
  j["coeff_classical"] = report.coeff_classical;
  if (std::isfinite(report.coeff_generalized)) {
    j["coeff_generalized"] = report.coeff_generalized;
  } else {
    j["coeff_generalized"] = nullptr;
  }
  j["coeff_degenerate"] = report.coeff_degenerate;
  j["unbias_defect_a"] = report.unbias_defect_a;
  j["unbias_defect_b"] = report.unbias_defect_b;
  j["unbiased"] = report.unbiased;
  j["arthurs_goodman"] = verdict_to_json(report.arthurs_goodman);
  j["ozawa1"] = verdict_to_json(report.ozawa1);
  j["ozawa2"] = verdict_to_json(report.ozawa2);
  return j;
}

std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result res =
      std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) {
    throw Error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

std::string sweep_csv_header() {
  return "P,n,rob_mc,rob_se,sch_mc,sch_se,grob_mc,grob_se,gsch_mc,gsch_se,"
         "rob_an,sch_an,grob_an,gsch_an,seed";
}

std::string sweep_csv_row(const PuritySweepRow& row) {
  std::ostringstream out;
  out << format_double(row.purity) << ',' << row.n_samples << ','
      << format_double(row.mc.robertson) << ',' << format_double(row.se.robertson)
      << ',' << format_double(row.mc.schrodinger) << ','
      << format_double(row.se.schrodinger) << ','
      << format_double(row.mc.generalized_robertson) << ','
      << format_double(row.se.generalized_robertson) << ','
      << format_double(row.mc.generalized_schrodinger) << ','
      << format_double(row.se.generalized_schrodinger) << ','
      << format_double(row.analytic.robertson) << ','
      << format_double(row.analytic.schrodinger) << ','
      << format_double(row.analytic.generalized_robertson) << ','
      << format_double(row.analytic.generalized_schrodinger) << ','
      << row.seed;
  return out.str();
}

}  // namespace ursa
