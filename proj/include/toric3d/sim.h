// Copyright 2026 The toric3d Authors
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

#ifndef TORIC3D_SIM_H_
#define TORIC3D_SIM_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toric3d/decoder_boundary.h"
#include "toric3d/decoder_periodic.h"
#include "toric3d/lattice.h"
#include "toric3d/stabilizer.h"

namespace toric3d {

/// Everything a trial needs, shared read-only between threads: the lattice,
/// its logical basis and a decoder matching its periodicity.
class TrialContext {
 public:
  TrialContext(ChainComplex3 c, LogicalBasis basis, DecoderOptions options = {});
  static TrialContext for_family(const FamilyInfo& family, DecoderOptions options = {});

  const ChainComplex3& complex() const { return *complex_; }
  const LogicalBasis& basis() const { return *basis_; }
  const FamilyInfo& family() const { return complex_->family(); }
  DecodeOutcome decode(const EdgeSet& s) const;

 private:
  std::shared_ptr<const ChainComplex3> complex_;
  std::shared_ptr<const LogicalBasis> basis_;
  std::shared_ptr<const BoundaryDecoder> boundary_;
  std::shared_ptr<const PeriodicDecoder> periodic_;
};

/// Stop after max_trials, or once failures (logical plus decode) reach
/// max_failures and at least min_trials have run.
struct StopRule {
  std::uint64_t min_trials = 0;
  std::uint64_t max_trials = 100000;
  std::uint64_t max_failures = 300;
};

/// Seed for one trial, mixed from the master seed and the trial coordinates
/// so any schedule draws the same errors.
std::uint64_t trial_seed(std::uint64_t master, int size, double p, std::uint64_t index);

/// Each face independently with probability p.
FaceSet sample_error(std::size_t face_count, double p, std::mt19937_64& rng);

enum class TrialKind { kTrivial, kLogical, kDecodeFailure };

struct TrialRecord {
  TrialKind kind = TrialKind::kTrivial;
  DecodeStatus status = DecodeStatus::kSuccess;
  bool retried = false;
  bool projection_failed_after_retry = false;
  bool fallback_used = false;
  std::size_t error_weight = 0;
  double decode_ms = 0.0;
};

/// Classifies a decoder result against the error that produced it. Throws
/// std::logic_error when a successful estimate leaves a nonzero syndrome.
TrialRecord evaluate_trial(const TrialContext& ctx, const FaceSet& error,
                           const DecodeOutcome& outcome);

TrialRecord run_trial(const TrialContext& ctx, double p, std::uint64_t master_seed,
                      std::uint64_t index, bool timing = false);

struct SweepConfig {
  std::vector<double> ps;
  std::uint64_t seed = 1;
  StopRule stop;
  int threads = 1;
  bool timing = false;
};

struct SweepPoint {
  std::string family;
  int size = 0;
  std::size_t qubits = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t decode_failures = 0;
  std::uint64_t logical_failures = 0;
  std::array<std::uint64_t, 4> by_status = {0, 0, 0, 0};
  std::uint64_t retried = 0;
  std::uint64_t projection_failed_after_retry = 0;
  std::uint64_t fallback_used = 0;
  std::uint64_t error_weight_sum = 0;
  /// Decode failures count as failures here.
  double logical_rate = 0.0;
  double std_error = 0.0;
  std::optional<double> mean_decode_ms;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepReport {
  std::vector<SweepPoint> points;
};

/// One (lattice, p) cell. Trials run in blocks across OpenMP threads and are
/// folded in index order, so the counts do not depend on the thread count.
SweepPoint run_point(const TrialContext& ctx, double p, const SweepConfig& config);
/// Plain loop over trials; the reference for run_point.
SweepPoint run_point_serial(const TrialContext& ctx, double p, const SweepConfig& config);

SweepReport run_sweep(const std::vector<TrialContext>& lattices, const SweepConfig& config);

inline constexpr const char* kCsvHeader =
    "family,L,n,p,trials,decode_failures,logical_failures,logical_rate,stderr,mean_decode_ms,seed";

std::string csv_row(const SweepPoint& point);
std::string to_csv(const SweepReport& report);

/// Abscissae where two rate curves sampled on the same ps cross, by linear
/// interpolation between neighbouring samples.
std::vector<double> curve_crossings(const std::vector<double>& ps, const std::vector<double>& a,
                                    const std::vector<double>& b);

}  // namespace toric3d

#endif  // TORIC3D_SIM_H_
