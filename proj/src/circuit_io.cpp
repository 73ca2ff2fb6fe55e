#include "anyonlo/circuit_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "anyonlo/cphi.hpp"
#include "anyonlo/invariants.hpp"

namespace anyonlo {

namespace {

using nlohmann::ordered_json;

double require_number(const ordered_json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw std::invalid_argument("circuit document: field '" + field +
                                "' must be a number");
  }
  return j[field].get<double>();
}

int require_int(const ordered_json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw std::invalid_argument("circuit document: field '" + field +
                                "' must be an integer");
  }
  return j[field].get<int>();
}

}  // namespace

CircuitDocument parse_circuit_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit document: ") + e.what());
  }

  CircuitDocument doc;
  doc.circuit.modes = require_int(j, "modes");
  doc.circuit.phi = require_number(j, "phi");

  if (!j.contains("input") || !j["input"].is_array()) {
    throw std::invalid_argument(
        "circuit document: field 'input' must be an array of 0/1");
  }
  std::vector<int> occupations;
  for (const auto& entry : j["input"]) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument(
          "circuit document: 'input' entries must be integers 0/1");
    }
    occupations.push_back(entry.get<int>());
  }
  if (static_cast<int>(occupations.size()) != doc.circuit.modes) {
    throw std::invalid_argument(
        "circuit document: 'input' length must equal 'modes'");
  }
  doc.input = BasisState::from_occupations(occupations);

  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw std::invalid_argument(
        "circuit document: field 'elements' must be an array");
  }
  for (const auto& e : j["elements"]) {
    if (!e.contains("type") || !e["type"].is_string()) {
      throw std::invalid_argument(
          "circuit document: every element needs a string 'type'");
    }
    const std::string type = e["type"].get<std::string>();
    const double theta = require_number(e, "theta");
    if (type == "ps") {
      doc.circuit.elements.push_back(
          OpticalElement::phase_shifter(require_int(e, "mode"), theta));
    } else if (type == "bs") {
      if (!e.contains("modes") || !e["modes"].is_array() ||
          e["modes"].size() != 2 || !e["modes"][0].is_number_integer() ||
          !e["modes"][1].is_number_integer()) {
        throw std::invalid_argument(
            "circuit document: 'bs' elements need \"modes\": [i, j]");
      }
      const int i = e["modes"][0].get<int>();
      const int mode_j = e["modes"][1].get<int>();
      if (i >= mode_j) {
        throw std::invalid_argument(
            "circuit document: beam-splitter modes must be strictly "
            "increasing");
      }
      doc.circuit.elements.push_back(
          OpticalElement::beam_splitter(i, mode_j, theta));
    } else {
      throw std::invalid_argument(
          "circuit document: element type must be 'ps' or 'bs', got '" +
          type + "'");
    }
  }

  doc.circuit.validate();
  return doc;
}

CircuitDocument load_circuit_document(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot open circuit document: " +
                                path.string());
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_circuit_document(buffer.str());
}

std::string circuit_document_json(const CircuitDocument& doc) {
  ordered_json j;
  j["modes"] = doc.circuit.modes;
  j["phi"] = doc.circuit.phi;
  ordered_json input = ordered_json::array();
  for (int mode = 1; mode <= doc.circuit.modes; ++mode) {
    input.push_back(doc.input.occupation(mode));
  }
  j["input"] = input;
  ordered_json elements = ordered_json::array();
  for (const auto& e : doc.circuit.elements) {
    ordered_json entry;
    if (e.kind == ElementKind::PhaseShifter) {
      entry["type"] = "ps";
      entry["mode"] = e.mode_a;
    } else {
      entry["type"] = "bs";
      entry["modes"] = {e.mode_a, e.mode_b};
    }
    entry["theta"] = e.theta;
    elements.push_back(entry);
  }
  j["elements"] = elements;
  return j.dump(2) + "\n";
}

std::string amplitude_report_json(const FockVector& v,
                                  std::string_view engine_name) {
  ordered_json j;
  j["engine"] = std::string(engine_name);
  j["modes"] = v.modes();
  j["norm"] = v.norm();
  ordered_json amps = ordered_json::object();
  for (const auto& [state, amp] : v.amplitudes()) {
    amps[state.to_string()] = {amp.real(), amp.imag()};
  }
  j["amplitudes"] = amps;
  return j.dump(2) + "\n";
}

std::map<std::string, cxd> parse_amplitude_report(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("amplitude report: ") + e.what());
  }
  if (!j.contains("amplitudes") || !j["amplitudes"].is_object()) {
    throw std::invalid_argument("amplitude report: missing 'amplitudes'");
  }
  std::map<std::string, cxd> out;
  for (const auto& [key, value] : j["amplitudes"].items()) {
    if (!value.is_array() || value.size() != 2) {
      throw std::invalid_argument(
          "amplitude report: amplitudes must be [re, im] pairs");
    }
    out[key] = cxd(value[0].get<double>(), value[1].get<double>());
  }
  return out;
}

std::string sample_report_json(
    const std::map<std::string, std::uint64_t>& counts, std::uint64_t shots,
    std::uint64_t seed, std::string_view engine_name) {
  ordered_json j;
  j["engine"] = std::string(engine_name);
  j["shots"] = shots;
  j["seed"] = seed;
  ordered_json c = ordered_json::object();
  for (const auto& [outcome, count] : counts) {
    c[outcome] = count;
  }
  j["counts"] = c;
  return j.dump(2) + "\n";
}

std::map<std::string, std::uint64_t> sample_outcomes(const FockVector& v,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shots must be at least 1");
  }
  const double norm_defect = std::abs(v.norm() - 1.0);
  if (norm_defect > 1e-8) {
    throw std::runtime_error(
        "state norm deviates from 1 by " + std::to_string(norm_defect) +
        "; refusing to sample an unnormalized state");
  }

  // cumulative table in the vector's deterministic iteration order
  std::vector<std::pair<double, const BasisState*>> cumulative;
  cumulative.reserve(v.amplitudes().size());
  double acc = 0.0;
  for (const auto& [state, amp] : v.amplitudes()) {
    acc += std::norm(amp);
    cumulative.emplace_back(acc, &state);
  }

  std::mt19937_64 rng(seed);
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::lower_bound(
        cumulative.begin(), cumulative.end(), u,
        [](const auto& entry, double value) { return entry.first < value; });
    if (it == cumulative.end()) --it;
    ++counts[it->second->to_string()];
  }
  return counts;
}

std::string sweep_phi_csv(double start, double stop, int count) {
  if (count < 2) {
    throw std::invalid_argument("phi sweep needs at least 2 grid points");
  }
  std::string csv = "phi,ep_invariants,ep_formula,abs_diff\n";
  char line[160];
  for (int k = 0; k < count; ++k) {
    const double phi = start + (stop - start) * k / (count - 1);
    const double ep_inv = local_invariants(c_phi_reference(phi).encoded).ep;
    const double ep_ref = ep_formula(phi);
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", phi, ep_inv,
                  ep_ref, std::abs(ep_inv - ep_ref));
    csv += line;
  }
  return csv;
}

}  // namespace anyonlo
