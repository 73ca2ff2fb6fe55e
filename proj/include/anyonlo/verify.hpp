// Self-verification suite: every reproduction and consistency check the
// project guarantees, runnable from the CLI and from the test harness.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anyonlo {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string note;  // extra findings, e.g. itemized variant deviations
};

// Deformed anti-commutation families for m <= 5 over a fixed phi set.
CheckResult check_deformed_algebra();
// BS_13(pi/4) on |1,1,0> and |0,1,1> against the closed-form amplitudes.
CheckResult check_worked_example();
// Analytic beam-splitter rule vs the Hermitian-exponential engine on all
// sector basis states, 200 random draws, m <= 6. The note records how the
// two printed sign/phase-placement variants fare against the same oracle.
CheckResult check_dual_engine_equivalence();
// Closed-form two-particle matrices of BS_12, BS_23, BS_13 on four modes,
// entrywise; the note itemizes where the swapped-phase BS_13 variant
// deviates from the exponential oracle.
CheckResult check_two_particle_reference_matrices();
// 4x4 code-space restriction of C(phi) vs the controlled-rotation form;
// |1,1,0,0> and |0,0,1,1> must be eigenvectors of the 6x6.
CheckResult check_encoded_gate_form();
// ep from local invariants of encoded C(phi) vs 1 - cos^4(phi/2) on a
// 50-point grid, plus the exact endpoints.
CheckResult check_entangling_power_curve();
// phi = 0: Fock amplitudes vs free-fermion determinants, phase included.
CheckResult check_fermion_endpoint();
// phi = pi: Fock amplitudes vs dense qubit-chain evolution.
CheckResult check_hardcore_endpoint();
// Generator actions and 100 random single-qubit targets, compiled and
// compared exactly.
CheckResult check_single_qubit_compilation();
// Norm and particle number on 100 random circuits of length <= 20.
CheckResult check_norm_and_number_conservation();

// Quick runs the algebra and worked-example checks; Full runs everything.
std::vector<CheckResult> run_verification(VerifyLevel level);

bool all_passed(const std::vector<CheckResult>& results);
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace anyonlo
