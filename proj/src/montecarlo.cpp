#include "clonesim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "clonesim/error.hpp"
#include "clonesim/random_stream.hpp"

namespace clonesim {

namespace {

void validate_run(std::size_t samples, std::size_t shards) {
  if (samples < kMinSamples) {
    throw ParameterError("samples must be >= " + std::to_string(kMinSamples));
  }
  if (shards < 1) throw ParameterError("shards must be >= 1");
}

std::size_t block_count(std::size_t samples) { return (samples + kShotsPerBlock - 1) / kShotsPerBlock; }

std::size_t block_size(std::size_t block, std::size_t samples) {
  return std::min(kShotsPerBlock, samples - block * kShotsPerBlock);
}

// Runs fn(block, shots_in_block) for every block, each shard owning a
// contiguous range of blocks. Results are returned in block order.
template <class Partial, class Fn>
std::vector<Partial> run_blocks(std::size_t samples, std::size_t shards, const Fn& fn) {
  const std::size_t blocks = block_count(samples);
  std::vector<Partial> partials(blocks);
  const std::size_t workers = std::min(shards, blocks);
  auto work = [&](std::size_t first, std::size_t last) {
    for (std::size_t b = first; b < last; ++b) partials[b] = fn(b, block_size(b, samples));
  };
  if (workers == 1) {
    work(0, blocks);
    return partials;
  }
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t per = blocks / workers;
    const std::size_t extra = blocks % workers;
    std::size_t first = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t last = first + per + (w < extra ? 1 : 0);
      threads.emplace_back(work, first, last);
      first = last;
    }
  }
  return partials;
}

struct RunningMean {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  // Chan et al. pairwise combination.
  void merge(const RunningMean& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * (other.count / total);
    m2 += other.m2 + delta * delta * (count * other.count / total);
    count = total;
  }
};

}  // namespace

FidelityEstimate estimate_fidelity(const CloningConfig& config, Amplitude alpha,
                                   std::size_t samples, std::uint64_t seed, std::size_t shards) {
  validate_run(samples, shards);
  const ClonerPipeline pipeline(config, alpha);

  const auto partials = run_blocks<RunningMean>(samples, shards, [&](std::size_t block, std::size_t shots) {
    RandomStream rng(seed, block);
    RunningMean acc;
    for (std::size_t i = 0; i < shots; ++i) {
      acc.add(coherent_overlap_fidelity(alpha, pipeline.sample_clone_amplitude(rng)));
    }
    return acc;
  });

  RunningMean total;
  for (const auto& p : partials) total.merge(p);
  const double n = static_cast<double>(samples);
  const double variance = total.m2 / (n - 1.0);
  return FidelityEstimate{total.mean, std::sqrt(variance / n), samples, seed, config, alpha};
}

MomentEstimate estimate_clone_moments(const CloningConfig& config, Amplitude alpha,
                                      std::size_t samples, std::uint64_t seed, std::size_t shards) {
  validate_run(samples, shards);
  const ClonerPipeline pipeline(config, alpha);

  // Shift by the first trajectory so deterministic machines give exactly zero spread.
  const Amplitude shift = [&] {
    RandomStream rng(seed, 0);
    return pipeline.sample_clone_amplitude(rng);
  }();

  const auto sums = run_blocks<Amplitude>(samples, shards, [&](std::size_t block, std::size_t shots) {
    RandomStream rng(seed, block);
    Amplitude s{};
    for (std::size_t i = 0; i < shots; ++i) s += pipeline.sample_clone_amplitude(rng) - shift;
    return s;
  });
  Amplitude total{};
  for (Amplitude s : sums) total += s;
  const double n = static_cast<double>(samples);
  const Amplitude mean_offset = total / n;

  struct Central {
    double second = 0.0;
    double fourth = 0.0;
  };
  const auto centrals = run_blocks<Central>(samples, shards, [&](std::size_t block, std::size_t shots) {
    RandomStream rng(seed, block);
    Central c;
    for (std::size_t i = 0; i < shots; ++i) {
      const double e2 = std::norm(pipeline.sample_clone_amplitude(rng) - shift - mean_offset);
      c.second += e2;
      c.fourth += e2 * e2;
    }
    return c;
  });
  Central moments;
  for (const auto& c : centrals) {
    moments.second += c.second;
    moments.fourth += c.fourth;
  }

  const double variance = moments.second / (n - 1.0);
  const double spread_of_e2 = std::max(0.0, moments.fourth / n - std::pow(moments.second / n, 2));
  MomentEstimate est;
  est.mean_amplitude = shift + mean_offset;
  est.mean_std_error = std::sqrt(variance / n);
  est.complex_variance = variance;
  est.variance_std_error = std::sqrt(spread_of_e2 / n);
  est.samples = samples;
  est.seed = seed;
  return est;
}

}  // namespace clonesim
