// Copyright 2026 The dqc1sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqc1sim/dqc1.h"

#include <cmath>
#include <random>
#include <vector>

#include "dqc1sim/errors.h"
#include "dqc1sim/parallel.h"
#include "dqc1sim/rng.h"

namespace dqc1sim {

namespace {

constexpr std::uint64_t kStandardStream = 0x5354414e44415244ULL;
constexpr std::uint64_t kBlackBoxStream = 0x424c41434b424f58ULL;
constexpr std::size_t kShotChunk = 1 << 14;

void require_traceable(const UnitarySpec &u) {
    if (std::holds_alternative<UnitarySpec::Dense>(u.variant()) && u.dim() > kMaxDenseDim) {
        throw Error(ErrorKind::DimTooLarge, "dense unitary of dimension " + std::to_string(u.dim()));
    }
}

struct PlusCount {
    std::uint64_t n = 0;
    std::uint64_t plus = 0;

    double mean() const {
        return n == 0 ? 0.0 : (2.0 * static_cast<double>(plus) - static_cast<double>(n)) / static_cast<double>(n);
    }

    // Standard error of the mean of the +-1 outcomes.
    double std_error() const {
        if (n < 2) {
            return 0.0;
        }
        double m = mean();
        double nd = static_cast<double>(n);
        double var = nd / (nd - 1.0) * std::max(0.0, 1.0 - m * m);
        return std::sqrt(var / nd);
    }
};

int draw_outcome(double p_plus, SplitMix64 &rng) {
    return uniform01(rng) < p_plus ? +1 : -1;
}

}  // namespace

Complex dqc1_exact(const UnitarySpec &v) {
    require_traceable(v);
    return trace_of(v) / static_cast<double>(v.dim());
}

ShotRecord dqc1_shot(const UnitarySpec &v, Basis basis, std::uint64_t shot_index, std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, kStandardStream, shot_index));
    std::uint64_t x = uniform_below(rng, v.dim());
    Complex amp = v.diagonal(x);
    double p_plus = 0.5;
    switch (basis) {
        case Basis::X:
            p_plus = 0.5 * (1.0 + amp.real());
            break;
        case Basis::Y:
            p_plus = 0.5 * (1.0 - amp.imag());
            break;
        case Basis::Z:
            p_plus = 0.5;
            break;
    }
    return ShotRecord{basis, draw_outcome(p_plus, rng), shot_index, x, 0};
}

TraceEstimate dqc1_sample(const UnitarySpec &v, std::uint64_t shots, std::uint64_t seed, SamplingOptions options) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");
    }
    require_traceable(v);
    std::uint64_t x_shots = (shots + 1) / 2;
    std::size_t num_chunks = (shots + kShotChunk - 1) / kShotChunk;
    std::vector<PlusCount> x_counts(num_chunks), y_counts(num_chunks);
    for_each_chunk(shots, kShotChunk, options.threads, [&](std::size_t k, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; i++) {
            Basis basis = i < x_shots ? Basis::X : Basis::Y;
            ShotRecord rec = dqc1_shot(v, basis, i, seed);
            PlusCount &c = basis == Basis::X ? x_counts[k] : y_counts[k];
            c.n++;
            c.plus += rec.outcome > 0;
        }
    });
    PlusCount xs, ys;
    for (std::size_t k = 0; k < num_chunks; k++) {
        xs.n += x_counts[k].n;
        xs.plus += x_counts[k].plus;
        ys.n += y_counts[k].n;
        ys.plus += y_counts[k].plus;
    }
    TraceEstimate est;
    est.value = Complex(xs.mean(), -ys.mean());
    est.shots = shots;
    est.std_error_re = xs.std_error();
    est.std_error_im = ys.std_error();
    est.std_error = std::hypot(est.std_error_re, est.std_error_im);
    return est;
}

double bb_dqc1_exact(const UnitarySpec &u) {
    require_traceable(u);
    double d = static_cast<double>(u.dim());
    return std::norm(trace_of(u)) / (d * d);
}

ShotRecord bb_dqc1_shot(const UnitarySpec &u, std::uint64_t shot_index, std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, kBlackBoxStream, shot_index));
    std::uint64_t d = u.dim();
    std::uint64_t x = uniform_below(rng, d);
    std::uint64_t y = uniform_below(rng, d);
    double p_plus = 0.5 + 0.5 * (std::conj(u.diagonal(x)) * u.diagonal(y)).real();
    return ShotRecord{Basis::X, draw_outcome(p_plus, rng), shot_index, x, y};
}

TraceEstimate bb_dqc1_sample(const UnitarySpec &u, std::uint64_t shots, std::uint64_t seed, SamplingOptions options) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");
    }
    require_traceable(u);
    std::size_t num_chunks = (shots + kShotChunk - 1) / kShotChunk;
    std::vector<PlusCount> counts(num_chunks);
    for_each_chunk(shots, kShotChunk, options.threads, [&](std::size_t k, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; i++) {
            counts[k].n++;
            counts[k].plus += bb_dqc1_shot(u, i, seed).outcome > 0;
        }
    });
    PlusCount total;
    for (const auto &c : counts) {
        total.n += c.n;
        total.plus += c.plus;
    }
    TraceEstimate est;
    est.value = Complex(total.mean(), 0.0);
    est.shots = shots;
    est.std_error_re = total.std_error();
    est.std_error = est.std_error_re;
    return est;
}

GlobalPhaseReport global_phase_nogo_check(const UnitarySpec &u, double theta, std::uint64_t trials,
                                          std::uint64_t seed) {
    UnitarySpec phased = UnitarySpec::scalar_phase(theta, u);
    GlobalPhaseReport rep;
    rep.theta = theta;
    rep.blackbox_exact_deviation = std::abs(bb_dqc1_exact(phased) - bb_dqc1_exact(u));

    std::size_t d = u.dim();
    if (2 * d * d <= kMaxOperatorDim && d <= kMaxDenseDim) {
        std::mt19937_64 rng(derive_seed(seed, 0x4e4f474fULL, 0));
        rep.blackbox_state_deviation = 0.0;
        for (std::uint64_t k = 0; k < trials; k++) {
            auto rho = DensityMatrix::make(random_density(d, rng));
            auto sigma = DensityMatrix::make(random_density(d, rng));
            double dev = max_abs_diff(build_tau_bb(u, rho, sigma).matrix(), build_tau_bb(phased, rho, sigma).matrix());
            rep.blackbox_state_deviation = std::max(rep.blackbox_state_deviation, dev);
        }
    }

    std::uint64_t shots = std::max<std::uint64_t>(trials, 1) * 1000;
    rep.blackbox_sample_deviation =
        std::abs(bb_dqc1_sample(phased, shots, seed).value - bb_dqc1_sample(u, shots, seed).value);

    rep.standard_plain = dqc1_exact(u);
    rep.standard_phased = dqc1_exact(phased);
    rep.standard_phase_error = std::abs(rep.standard_phased - std::polar(1.0, theta) * rep.standard_plain);
    rep.standard_sees_phase = std::abs(rep.standard_phased - rep.standard_plain) > 1e-12;
    return rep;
}

}  // namespace dqc1sim
