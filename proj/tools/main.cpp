// anyonlo command-line interface: run circuits, sweep the entangling-power
// curve, sample measurement outcomes, search gate decompositions, and run
// the verification suite.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "anyonlo/circuit_io.hpp"
#include "anyonlo/cphi.hpp"
#include "anyonlo/decompose.hpp"
#include "anyonlo/verify.hpp"

namespace {

using namespace anyonlo;

constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot write to " + path);
  }
  file << text;
}

Engine parse_engine(const std::string& name) {
  if (name == "analytic") return Engine::Analytic;
  if (name == "exact") return Engine::Exact;
  throw std::invalid_argument("engine must be 'analytic' or 'exact'");
}

struct GridSpec {
  double start = 0.0;
  double stop = std::numbers::pi;
  int count = 50;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must look like start:stop:count");
  }
  try {
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    grid.count = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like start:stop:count");
  }
  return grid;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Linear optics of 1D fermionic anyons"};
  app.require_subcommand(1);

  std::string document_path;
  std::string engine_name = "analytic";
  std::string output_path;
  std::string grid_text = "0:3.14159265358979312:50";
  std::string level_name = "full";
  std::optional<double> phi_override;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 1;
  double phi_target = std::numbers::pi;
  int max_length = 4;
  double threshold = 1e-8;

  auto* run = app.add_subcommand("run", "Apply a circuit document to its input state");
  run->add_option("file", document_path, "circuit document (JSON)")->required();
  run->add_option("--engine", engine_name, "analytic|exact");
  run->add_option("--phi", phi_override, "override the document's phi");
  run->add_option("--output", output_path, "write the report here instead of stdout");

  auto* sweep = app.add_subcommand("sweep-phi",
                                   "Entangling power of the two-qubit gate over a phi grid");
  sweep->add_option("--grid", grid_text, "start:stop:count (radians)");
  sweep->add_option("--output", output_path, "write the CSV here instead of stdout");

  auto* sample = app.add_subcommand("sample", "Sample Fock-basis measurement outcomes");
  sample->add_option("file", document_path, "circuit document (JSON)")->required();
  sample->add_option("--engine", engine_name, "analytic|exact");
  sample->add_option("--phi", phi_override, "override the document's phi");
  sample->add_option("--shots", shots, "number of samples");
  sample->add_option("--seed", seed, "generator seed");
  sample->add_option("--output", output_path, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_option("--level", level_name, "quick|full");

  auto* decompose = app.add_subcommand(
      "decompose", "Search a beam-splitter sequence for the two-qubit gate");
  decompose->add_option("--phi", phi_target, "statistical angle of the target gate");
  decompose->add_option("--max-len", max_length, "maximum sequence length");
  decompose->add_option("--threshold", threshold, "residual acceptance threshold");
  decompose->add_option("--output", output_path, "write the circuit here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed() || sample->parsed()) {
    CircuitDocument doc = load_circuit_document(document_path);
    if (phi_override) {
      doc.circuit.phi = *phi_override;
    }
    doc.circuit.validate();
    const Engine engine = parse_engine(engine_name);
    const FockVector out = run_circuit(doc.circuit, doc.input, engine);
    if (run->parsed()) {
      write_output(amplitude_report_json(out, engine_name), output_path);
    } else {
      const auto counts = sample_outcomes(out, shots, seed);
      write_output(sample_report_json(counts, shots, seed, engine_name),
                   output_path);
    }
    return 0;
  }

  if (sweep->parsed()) {
    const GridSpec grid = parse_grid(grid_text);
    write_output(sweep_phi_csv(grid.start, grid.stop, grid.count), output_path);
    return 0;
  }

  if (verify->parsed()) {
    VerifyLevel level;
    if (level_name == "quick") {
      level = VerifyLevel::Quick;
    } else if (level_name == "full") {
      level = VerifyLevel::Full;
    } else {
      throw std::invalid_argument("level must be 'quick' or 'full'");
    }
    const auto results = run_verification(level);
    print_report(std::cout, results);
    return all_passed(results) ? 0 : kExitVerification;
  }

  if (decompose->parsed()) {
    const CPhiGate gate = c_phi_reference(phi_target);
    const std::pair<int, int> pairs[] = {{1, 2}, {2, 3}, {1, 3}};
    DecompositionOptions options;
    options.residual_threshold = threshold;
    const DecompositionResult result = search_decomposition(
        gate.two_particle, pairs, max_length, AlgebraConfig{4, phi_target},
        options);

    CircuitDocument doc{result.circuit, encode_logical("00")};
    std::string text = circuit_document_json(doc);
    text += result.found ? "residual " : "no sequence below threshold; best residual ";
    text += std::to_string(result.residual) + "\n";
    write_output(text, output_path);
    return 0;
  }

  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
}
