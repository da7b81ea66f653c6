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

#include "toric3d/sim.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>

namespace toric3d {

TrialContext::TrialContext(ChainComplex3 c, LogicalBasis basis, DecoderOptions options)
    : complex_(std::make_shared<const ChainComplex3>(std::move(c))),
      basis_(std::make_shared<const LogicalBasis>(std::move(basis))) {
  if (auto msg = check_logical_basis(*complex_, *basis_); !msg.empty()) {
    throw std::invalid_argument("TrialContext: " + msg);
  }
  if (complex_->periodic()) {
    periodic_ = std::make_shared<const PeriodicDecoder>(*complex_, *basis_, options);
  } else {
    boundary_ = std::make_shared<const BoundaryDecoder>(*complex_, options);
  }
}

TrialContext TrialContext::for_family(const FamilyInfo& family, DecoderOptions options) {
  ChainComplex3 c = build_family(family);
  LogicalBasis basis = logical_basis(c, face_equivalence_classes(c));
  return TrialContext(std::move(c), std::move(basis), options);
}

DecodeOutcome TrialContext::decode(const EdgeSet& s) const {
  return periodic_ ? periodic_->decode(s) : boundary_->decode(s);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, int size, double p, std::uint64_t index) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(size));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p));
  return splitmix64(h ^ index);
}

FaceSet sample_error(std::size_t face_count, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_error: p outside [0, 1]");
  FaceSet error(face_count);
  for (std::size_t f = 0; f < face_count; ++f) {
    // 53-bit uniform in [0, 1); spelled out so the draw is the same everywhere.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p) error.insert(static_cast<FaceId>(f));
  }
  return error;
}

TrialRecord evaluate_trial(const TrialContext& ctx, const FaceSet& error,
                           const DecodeOutcome& outcome) {
  TrialRecord r;
  r.status = outcome.status;
  r.error_weight = error.weight();
  r.retried = outcome.diagnostics.retried;
  r.projection_failed_after_retry =
      outcome.diagnostics.retried && outcome.diagnostics.projection_failures > 1;
  r.fallback_used = outcome.diagnostics.fallback_used;
  if (!outcome.success()) {
    r.kind = TrialKind::kDecodeFailure;
    return r;
  }
  const FaceSet residual = error ^ outcome.estimate;
  if (!syndrome(ctx.complex(), residual).empty()) {
    throw std::logic_error("decoder reported success with a syndrome left over");
  }
  r.kind = classify_zero_syndrome(ctx.complex(), ctx.basis(), residual).trivial()
               ? TrialKind::kTrivial
               : TrialKind::kLogical;
  return r;
}

TrialRecord run_trial(const TrialContext& ctx, double p, std::uint64_t master_seed,
                      std::uint64_t index, bool timing) {
  std::mt19937_64 rng(trial_seed(master_seed, ctx.family().dims[0], p, index));
  const FaceSet error = sample_error(ctx.complex().face_count(), p, rng);
  const EdgeSet s = syndrome(ctx.complex(), error);
  const auto start = std::chrono::steady_clock::now();
  const DecodeOutcome outcome = ctx.decode(s);
  const auto stop = std::chrono::steady_clock::now();
  TrialRecord r = evaluate_trial(ctx, error, outcome);
  if (timing) r.decode_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

namespace {

class PointAccumulator {
 public:
  PointAccumulator(const TrialContext& ctx, double p, const SweepConfig& config)
      : rule_(config.stop), timing_(config.timing) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sweep p outside [0, 1]");
    if (rule_.max_trials == 0) throw std::invalid_argument("stop rule needs max_trials > 0");
    point_.family = family_name(ctx.family().kind);
    point_.size = ctx.family().dims[0];
    point_.qubits = ctx.complex().face_count();
    point_.p = p;
    point_.seed = config.seed;
  }

  /// Folds one trial in; returns true once the stop rule is met.
  bool add(const TrialRecord& r) {
    ++point_.trials;
    point_.by_status[static_cast<std::size_t>(r.status)]++;
    if (r.kind == TrialKind::kDecodeFailure) ++point_.decode_failures;
    if (r.kind == TrialKind::kLogical) ++point_.logical_failures;
    point_.retried += r.retried;
    point_.projection_failed_after_retry += r.projection_failed_after_retry;
    point_.fallback_used += r.fallback_used;
    point_.error_weight_sum += r.error_weight;
    total_ms_ += r.decode_ms;
    return done();
  }

  bool done() const {
    const std::uint64_t failures = point_.decode_failures + point_.logical_failures;
    return point_.trials >= rule_.max_trials ||
           (failures >= rule_.max_failures && point_.trials >= rule_.min_trials);
  }

  SweepPoint finish() {
    const double n = static_cast<double>(point_.trials);
    const double rate = (point_.decode_failures + point_.logical_failures) / n;
    point_.logical_rate = rate;
    point_.std_error = std::sqrt(rate * (1.0 - rate) / n);
    if (timing_) point_.mean_decode_ms = total_ms_ / n;
    return point_;
  }

 private:
  StopRule rule_;
  bool timing_;
  SweepPoint point_;
  double total_ms_ = 0.0;
};

constexpr std::uint64_t kBlockPerThread = 64;

}  // namespace

SweepPoint run_point_serial(const TrialContext& ctx, double p, const SweepConfig& config) {
  PointAccumulator acc(ctx, p, config);
  for (std::uint64_t i = 0; !acc.add(run_trial(ctx, p, config.seed, i, config.timing)); ++i) {
  }
  return acc.finish();
}

SweepPoint run_point(const TrialContext& ctx, double p, const SweepConfig& config) {
  PointAccumulator acc(ctx, p, config);
  const int threads = std::max(1, config.threads);
  const std::uint64_t block = kBlockPerThread * static_cast<std::uint64_t>(threads);
  std::vector<TrialRecord> records;
  std::uint64_t next = 0;
  bool stopped = false;
  while (!stopped) {
    const std::uint64_t count = std::min(block, config.stop.max_trials - next);
    records.assign(count, TrialRecord{});
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
      try {
        records[k] = run_trial(ctx, p, config.seed, next + k, config.timing);
      } catch (...) {
#pragma omp critical
        error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    // Fold in index order so the cut-off trial matches the serial loop.
    for (const auto& r : records) {
      if (acc.add(r)) {
        stopped = true;
        break;
      }
    }
    next += count;
  }
  return acc.finish();
}

SweepReport run_sweep(const std::vector<TrialContext>& lattices, const SweepConfig& config) {
  SweepReport report;
  for (const auto& ctx : lattices) {
    for (double p : config.ps) report.points.push_back(run_point(ctx, p, config));
  }
  return report;
}

std::string csv_row(const SweepPoint& pt) {
  char buf[512];
  std::string mean = "NA";
  if (pt.mean_decode_ms) {
    char m[64];
    std::snprintf(m, sizeof m, "%.6f", *pt.mean_decode_ms);
    mean = m;
  }
  std::snprintf(buf, sizeof buf, "%s,%d,%zu,%.6g,%llu,%llu,%llu,%.6g,%.6g,%s,%llu",
                pt.family.c_str(), pt.size, pt.qubits, pt.p,
                static_cast<unsigned long long>(pt.trials),
                static_cast<unsigned long long>(pt.decode_failures),
                static_cast<unsigned long long>(pt.logical_failures), pt.logical_rate,
                pt.std_error, mean.c_str(), static_cast<unsigned long long>(pt.seed));
  return buf;
}

std::string to_csv(const SweepReport& report) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& pt : report.points) out += csv_row(pt) + "\n";
  return out;
}

std::vector<double> curve_crossings(const std::vector<double>& ps, const std::vector<double>& a,
                                    const std::vector<double>& b) {
  if (ps.size() != a.size() || ps.size() != b.size()) {
    throw std::invalid_argument("curve_crossings: length mismatch");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    const double d0 = a[i] - b[i];
    const double d1 = a[i + 1] - b[i + 1];
    if (d0 == 0.0) {
      out.push_back(ps[i]);
    } else if ((d0 < 0.0) != (d1 < 0.0) && d1 != 0.0) {
      out.push_back(ps[i] + (ps[i + 1] - ps[i]) * d0 / (d0 - d1));
    }
  }
  if (!ps.empty() && a.back() == b.back()) out.push_back(ps.back());
  return out;
}

}  // namespace toric3d
