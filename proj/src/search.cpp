#include <cmath>

#include "crooked/crooked.hpp"
#include "crooked/error.hpp"

namespace crooked {

double sampled_strip_width(const BlockSchedule& sched, std::size_t k, std::size_t samples) {
  const auto steps = inverse_steps(sched, k);
  const CurveSource src{0.0, steps, sched.params};
  const double loop = kTwoPi * std::ldexp(1.0, static_cast<int>(sched.total_T(k)));
  double w = 0.0;
#pragma omp parallel for reduction(max : w) schedule(static)
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = loop * static_cast<double>(i) / static_cast<double>(samples);
    const LiftPoint a = src.evaluate(u, kAnnulusHalfHeight);
    const LiftPoint b = src.evaluate(u, -kAnnulusHalfHeight);
    w = std::max(w, std::hypot(a.x - b.x, a.y - b.y));
  }
  return w;
}

namespace {

void check_N_sequence(std::size_t depth, const std::vector<int>& N) {
  if (N.size() < depth) throw Error(ErrorCode::ConfigInvalid, "N sequence shorter than the target depth");
  for (std::size_t i = 0; i < N.size(); ++i) {
    if (N[i] < 4) throw Error(ErrorCode::ConfigInvalid, "rectangle counts must be >= 4");
    if (i > 0 && N[i] < N[i - 1]) throw Error(ErrorCode::ConfigInvalid, "N sequence must be nondecreasing");
  }
}

bool block_is_crooked(const Block& b, const RectanglePartition& part, const WParams& params,
                      const RefineOptions& refine, std::size_t* length) {
  BlockSchedule single{{b}, params};
  LiftedCurve image;
  try {
    image = trace_curve(single, 1, 0.0, refine);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnresolvedCurve) return false;
    throw;
  }
  const Itinerary it = base_loop_itinerary(image, part);
  if (length) *length = it.size();
  return is_crooked_loop(it, part.N);
}

}  // namespace

SearchReport find_crooked_blocks(std::size_t target_depth, const std::vector<int>& N_sequence,
                                 const WParams& params, const SearchOptions& opts) {
  params.validate();
  check_N_sequence(target_depth, N_sequence);
  SearchReport report;
  report.schedule.params = params;

  for (std::size_t i = 0; i < target_depth; ++i) {
    const AnnulusLevel level = trace_level(report.schedule, i, opts.refine);
    const RectanglePartition part = partition(level, report.schedule, N_sequence[i]);
    const double diam = max_rect_diameter(part);
    report.diameters.push_back(diam);

    DepthVerdict verdict;
    verdict.depth = i;
    verdict.N = part.N;
    verdict.max_rect_diameter = diam;
    verdict.min_cut_spacing = part.loop_length / part.N;
    bool found = false;
    for (int sum = 1; sum <= opts.max_block_size && !found; ++sum) {
      for (int m = 0; m <= sum && !found; ++m) {
        if (report.evaluated >= opts.budget) {
          throw Error(ErrorCode::SearchExhausted, "budget of " + std::to_string(opts.budget) +
                                                      " candidates spent at depth " + std::to_string(i));
        }
        ++report.evaluated;
        ++verdict.candidates_tried;
        const Block b{m, sum - m};
        std::size_t len = 0;
        if (block_is_crooked(b, part, params, opts.refine, &len)) {
          found = true;
          verdict.block = b;
          verdict.crooked = true;
          verdict.itinerary_length = len;
        }
      }
    }
    if (!found) {
      throw Error(ErrorCode::SearchExhausted,
                  "no block up to size " + std::to_string(opts.max_block_size) + " at depth " + std::to_string(i));
    }
    report.schedule.blocks.push_back(verdict.block);
    verdict.strip_width = sampled_strip_width(report.schedule, i + 1);
    verdict.thinness_margin = verdict.strip_width > 0 ? verdict.min_cut_spacing / verdict.strip_width : 0.0;
    report.verdicts.push_back(verdict);
  }
  return report;
}

std::vector<bool> verify_schedule(const BlockSchedule& sched, const std::vector<int>& N_sequence,
                                  const RefineOptions& refine) {
  sched.validate();
  check_N_sequence(sched.depth(), N_sequence);
  std::vector<bool> out;
  for (std::size_t i = 0; i < sched.depth(); ++i) {
    const AnnulusLevel level = trace_level(sched, i, refine);
    const RectanglePartition part = partition(level, sched, N_sequence[i]);
    out.push_back(block_is_crooked(sched.blocks[i], part, sched.params, refine, nullptr));
  }
  return out;
}

}  // namespace crooked
