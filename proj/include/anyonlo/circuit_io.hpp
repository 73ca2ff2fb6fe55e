// JSON circuit documents, amplitude/sample reports, and the sweep CSV.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "anyonlo/linear_optics.hpp"

namespace anyonlo {

// On-disk circuit description:
// {
//   "modes": 3,
//   "phi": 1.0,
//   "input": [1, 1, 0],
//   "elements": [
//     {"type": "bs", "modes": [1, 3], "theta": 0.7853981633974483},
//     {"type": "ps", "mode": 2, "theta": 0.25}
//   ]
// }
struct CircuitDocument {
  Circuit circuit;
  BasisState input;
};

// Throws std::invalid_argument with the offending field (or the JSON
// parser's position) in the message.
CircuitDocument parse_circuit_document(const std::string& text);
CircuitDocument load_circuit_document(const std::filesystem::path& path);
std::string circuit_document_json(const CircuitDocument& doc);

// {"engine": ..., "modes": ..., "norm": ..., "amplitudes": {"110": [re, im]}}
// Doubles are serialized so that re-parsing reproduces them bit-exactly.
std::string amplitude_report_json(const FockVector& v,
                                  std::string_view engine_name);
std::map<std::string, cxd> parse_amplitude_report(const std::string& text);

std::string sample_report_json(const std::map<std::string, std::uint64_t>& counts,
                               std::uint64_t shots, std::uint64_t seed,
                               std::string_view engine_name);

// Draws `shots` occupation strings with probability |amplitude|^2 using a
// seeded generator. Throws std::runtime_error if the state norm deviates
// from 1 by more than 1e-8.
std::map<std::string, std::uint64_t> sample_outcomes(const FockVector& v,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

// CSV with header phi,ep_invariants,ep_formula,abs_diff over a uniform
// grid of `count` >= 2 points from start to stop inclusive.
std::string sweep_phi_csv(double start, double stop, int count);

}  // namespace anyonlo
