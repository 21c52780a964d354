// Copyright 2026 The qdestruct Authors
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

#include "cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "qdestruct/symmetry.hpp"

namespace qdestruct::cli {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(key, "missing required field");
  return doc.at(key);
}

SystemType parse_system(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (SystemType t :
         {SystemType::OneParticle, SystemType::TwoDistinguishable,
          SystemType::TwoIdenticalSymmetric,
          SystemType::TwoIdenticalAntisymmetric}) {
      if (to_string(t) == s) return t;
    }
  }
  throw ValidationError("system",
                        "expected one_particle, two_distinguishable, "
                        "two_identical_symmetric or "
                        "two_identical_antisymmetric");
}

std::vector<std::size_t> parse_dims(const json& j, SystemType system) {
  if (!j.is_array() || j.empty() || j.size() > 2) {
    throw ValidationError("dims", "expected an array of one or two integers");
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 1) {
      throw ValidationError("dims[" + std::to_string(i) + "]",
                            "expected a positive integer");
    }
    dims.push_back(j[i].get<std::size_t>());
  }
  switch (system) {
    case SystemType::OneParticle:
      if (dims.size() != 1) {
        throw ValidationError("dims", "one_particle takes a single dimension");
      }
      break;
    case SystemType::TwoDistinguishable:
      if (dims.size() != 2) {
        throw ValidationError("dims", "two_distinguishable takes [d_a, d_b]");
      }
      break;
    case SystemType::TwoIdenticalSymmetric:
    case SystemType::TwoIdenticalAntisymmetric:
      if (dims.size() == 2 && dims[0] != dims[1]) {
        throw ValidationError("dims", "identical particles share one space");
      }
      if (dims[0] < 2 && system == SystemType::TwoIdenticalAntisymmetric) {
        throw ValidationError("dims",
                              "antisymmetric states need dimension >= 2");
      }
      dims.assign(2, dims[0]);
      break;
  }
  return dims;
}

std::vector<std::vector<std::string>> parse_labels(
    const json& doc, const std::vector<std::size_t>& dims, SystemType system) {
  const std::size_t factors = system == SystemType::TwoDistinguishable ? 2 : 1;
  std::vector<std::vector<std::string>> labels;
  if (!doc.contains("labels")) {
    for (std::size_t f = 0; f < factors; ++f) {
      labels.push_back(PhysicalSpace(dims[f]).labels());
    }
  } else {
    const json& j = doc.at("labels");
    if (!j.is_array() || j.size() != factors) {
      throw ValidationError("labels", "expected " + std::to_string(factors) +
                                          " list(s) of basis labels");
    }
    for (std::size_t f = 0; f < factors; ++f) {
      const std::string field = "labels[" + std::to_string(f) + "]";
      if (!j[f].is_array() || j[f].size() != dims[f]) {
        throw ValidationError(field, "expected " + std::to_string(dims[f]) +
                                         " labels");
      }
      std::vector<std::string> list;
      for (const json& l : j[f]) {
        if (!l.is_string()) throw ValidationError(field, "labels are strings");
        list.push_back(l.get<std::string>());
      }
      if (std::set<std::string>(list.begin(), list.end()).size() != list.size()) {
        throw ValidationError(field, "labels must be unique");
      }
      labels.push_back(std::move(list));
    }
  }
  if (system != SystemType::OneParticle && factors == 1) {
    labels.push_back(labels.front());
  }
  return labels;
}

Tolerances parse_tolerances(const json& doc) {
  Tolerances tol;
  if (!doc.contains("tolerances")) return tol;
  const json& j = doc.at("tolerances");
  if (!j.is_object()) throw ValidationError("tolerances", "expected an object");
  const std::pair<const char*, double*> fields[] = {
      {"hermiticity", &tol.hermiticity}, {"trace", &tol.trace},
      {"psd", &tol.psd},                 {"eigenvalue", &tol.eigenvalue},
      {"probability", &tol.probability}, {"symmetry", &tol.symmetry}};
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string field = "tolerances." + it.key();
    double* target = nullptr;
    for (const auto& [name, ptr] : fields) {
      if (it.key() == name) target = ptr;
    }
    if (!target) throw ValidationError(field, "unknown tolerance");
    if (!it->is_number() || !(it->get<double>() > 0.0)) {
      throw ValidationError(field, "expected a positive number");
    }
    *target = it->get<double>();
  }
  return tol;
}

Matrix preset_state(const std::string& name, SystemType system,
                    const std::vector<std::size_t>& dims) {
  const std::size_t n =
      system == SystemType::OneParticle ? dims[0] : dims[0] * dims[1];
  const auto size = static_cast<Eigen::Index>(n);
  if (name == "maximally_mixed") {
    if (system == SystemType::TwoIdenticalSymmetric ||
        system == SystemType::TwoIdenticalAntisymmetric) {
      const ExchangeSign sign = system == SystemType::TwoIdenticalSymmetric
                                    ? ExchangeSign::Symmetric
                                    : ExchangeSign::Antisymmetric;
      const Matrix p = exchange_projector(dims[0], sign);
      return p / p.trace().real();
    }
    return Matrix::Identity(size, size) / static_cast<double>(n);
  }
  if (name == "singlet" || name == "triplet0") {
    if (system == SystemType::OneParticle || dims[0] != 2 || dims[1] != 2) {
      throw ValidationError("state", name + " needs two particles of dimension 2");
    }
    const double s = name == "singlet" ? -1.0 : 1.0;
    Vector v = Vector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);  // |0> (x) |1>
    v(2) = s / std::sqrt(2.0);    // |1> (x) |0>
    return v * v.adjoint();
  }
  throw ValidationError("state",
                        "unknown preset '" + name +
                            "' (expected singlet, triplet0 or maximally_mixed)");
}

DensityMatrix parse_state(const json& j, SystemType system,
                          const std::vector<std::size_t>& dims,
                          const Tolerances& tol) {
  Matrix m = j.is_string() ? preset_state(j.get<std::string>(), system, dims)
                           : parse_matrix(j, "state");
  const std::size_t n =
      system == SystemType::OneParticle ? dims[0] : dims[0] * dims[1];
  if (m.rows() != static_cast<Eigen::Index>(n)) {
    throw ValidationError("state", "expected a " + std::to_string(n) + "x" +
                                       std::to_string(n) + " matrix, got " +
                                       std::to_string(m.rows()) + "x" +
                                       std::to_string(m.rows()));
  }
  DensityMatrix rho = [&] {
    try {
      return certify_density(std::move(m), tol);
    } catch (const CertificationError& e) {
      throw ValidationError("state", e.what());
    }
  }();
  if (system == SystemType::TwoIdenticalSymmetric ||
      system == SystemType::TwoIdenticalAntisymmetric) {
    const ExchangeSign sign = system == SystemType::TwoIdenticalSymmetric
                                  ? ExchangeSign::Symmetric
                                  : ExchangeSign::Antisymmetric;
    const SymmetryReport report = check_exchange_symmetry(rho.matrix(), dims[0], sign);
    if (!report.passed(tol.symmetry)) {
      throw ValidationError("state", "violates the " +
                                         std::string(to_string(sign)) +
                                         " exchange conditions (violation " +
                                         std::to_string(report.violation) + ")");
    }
  }
  return rho;
}

Matrix parse_observable(const json& j, const std::string& field) {
  if (j.is_object()) {
    if (!j.contains("diagonal") || !j.at("diagonal").is_array() ||
        j.at("diagonal").empty()) {
      throw ValidationError(field, "expected {\"diagonal\": [numbers]}");
    }
    const json& diag = j.at("diagonal");
    const auto n = static_cast<Eigen::Index>(diag.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const json& v = diag[static_cast<std::size_t>(i)];
      if (!v.is_number()) {
        throw ValidationError(
            field + ".diagonal[" + std::to_string(i) + "]", "expected a number");
      }
      m(i, i) = v.get<double>();
    }
    return m;
  }
  return parse_matrix(j, field);
}

Projector parse_detector(const json& doc, const char* obs_key,
                         const char* omega_key, std::size_t dim,
                         const Tolerances& tol) {
  const Matrix obs = parse_observable(require(doc, obs_key), obs_key);
  if (obs.rows() != static_cast<Eigen::Index>(dim)) {
    throw ValidationError(obs_key, "expected dimension " + std::to_string(dim));
  }
  const json& omega = require(doc, omega_key);
  if (!omega.is_array()) throw ValidationError(omega_key, "expected an array");
  SpectralWindow window{{}, tol.eigenvalue};
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!omega[i].is_number()) {
      throw ValidationError(std::string(omega_key) + "[" + std::to_string(i) + "]",
                            "expected a number");
    }
    window.omega.push_back(omega[i].get<double>());
  }
  try {
    return projector_from_observable(obs, window, tol);
  } catch (const NonHermitianObservable& e) {
    throw ValidationError(obs_key, e.what());
  }
}

}  // namespace

std::string_view to_string(SystemType system) {
  switch (system) {
    case SystemType::OneParticle:
      return "one_particle";
    case SystemType::TwoDistinguishable:
      return "two_distinguishable";
    case SystemType::TwoIdenticalSymmetric:
      return "two_identical_symmetric";
    case SystemType::TwoIdenticalAntisymmetric:
      return "two_identical_antisymmetric";
  }
  return "unknown";
}

std::optional<ExchangeSign> Scenario::sign() const {
  if (system == SystemType::TwoIdenticalSymmetric) return ExchangeSign::Symmetric;
  if (system == SystemType::TwoIdenticalAntisymmetric) {
    return ExchangeSign::Antisymmetric;
  }
  return std::nullopt;
}

ExtendedSpace Scenario::one_particle_space() const {
  return ExtendedSpace(PhysicalSpace(labels.at(0)));
}

ProductSpace Scenario::product_space() const {
  return ProductSpace(ExtendedSpace(PhysicalSpace(labels.at(0))),
                      ExtendedSpace(PhysicalSpace(labels.at(1))));
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ValidationError("", "expected a JSON object");
  const SystemType system = parse_system(require(doc, "system"));
  const std::vector<std::size_t> dims = parse_dims(require(doc, "dims"), system);
  auto labels = parse_labels(doc, dims, system);
  const Tolerances tol = parse_tolerances(doc);

  const json& mode_j = require(doc, "mode");
  if (!mode_j.is_string() || (mode_j != "selection" && mode_j != "no_selection")) {
    throw ValidationError("mode", "expected selection or no_selection");
  }
  const Mode mode = mode_j == "selection" ? Mode::Selection : Mode::NoSelection;

  DensityMatrix state = parse_state(require(doc, "state"), system, dims, tol);
  Projector pi_a = parse_detector(doc, "observable", "omega", dims[0], tol);
  std::optional<Projector> pi_b;
  if (system == SystemType::TwoDistinguishable) {
    pi_b = parse_detector(doc, "observable_b", "omega_b", dims[1], tol);
  } else {
    for (const char* key : {"observable_b", "omega_b"}) {
      if (doc.contains(key)) {
        throw ValidationError(key, "only used by two_distinguishable systems");
      }
    }
  }
  return Scenario{system, dims,  std::move(labels), std::move(state),
                  std::move(pi_a), std::move(pi_b), mode, tol};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

}  // namespace qdestruct::cli
