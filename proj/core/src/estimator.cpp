#include "fipeft/estimator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fipeft {

namespace {

// Optional iteration counter threaded through the frequency stage; used by
// the complexity instrumentation, inert (null) for plain calls.
struct OpCounter {
  std::uint64_t* slot = nullptr;
  void add(std::uint64_t k) const {
    if (slot) *slot += k;
  }
};

SampledSignal remove_spikes_impl(const SampledSignal& s, double a1,
                                 OpCounter ops) {
  SampledSignal out = s;
  const std::size_t n = s.size();
  if (n < 3) return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    ops.add(1);
    const double prev = s.y[i - 1];
    const double cur = s.y[i];
    const double next = s.y[i + 1];
    if (prev > a1 && cur < a1 && next > a1) {
      // Negative spike; replace only if its deviation is smaller than both
      // neighbors', using the neighbor closest to the mean.
      const double weaker = std::min(prev, next);
      if (weaker - a1 > a1 - cur) out.y[i] = weaker;
    } else if (prev < a1 && cur > a1 && next < a1) {
      const double weaker = std::max(prev, next);
      if (a1 - weaker > cur - a1) out.y[i] = weaker;
    }
  }
  return out;
}

CrossingSet find_crossings_impl(const SampledSignal& s, double a1,
                                OpCounter ops) {
  CrossingSet out;
  const std::size_t n = s.size();
  if (n == 0) return out;
  double abs_sum = std::abs(s.y[0] - a1);
  std::size_t seg_len = 1;
  for (std::size_t i = 1; i < n; ++i) {
    ops.add(1);
    const double prev = s.y[i - 1];
    const double cur = s.y[i];
    const bool crossing = (prev > a1 && cur < a1) || (prev < a1 && cur > a1);
    if (crossing) {
      const double dx = s.x[i] - s.x[i - 1];
      double pos;
      if (dx > 1e-8) {
        const double m = (cur - prev) / dx;
        const double n0 = cur - m * s.x[i];
        pos = (a1 - n0) / m;
      } else {
        // Nearly coincident timestamps make the line slope meaningless.
        pos = s.x[i];
      }
      out.positions.push_back(pos);
      out.mean_dev.push_back(abs_sum / static_cast<double>(seg_len));
      abs_sum = std::abs(cur - a1);
      seg_len = 1;
    } else {
      abs_sum += std::abs(cur - a1);
      ++seg_len;
    }
  }
  return out;
}

ReferenceDistance reference_distance_impl(const std::vector<double>& d,
                                          OpCounter ops) {
  ReferenceDistance out;
  const std::size_t n = d.size();
  if (n == 0) return out;
  if (n == 1) {
    out.d_ref = d[0];
    return out;
  }

  // first/last sorted index per bin, kept from the pass that succeeds.
  std::array<std::size_t, 5> first{};
  std::array<std::size_t, 5> last{};
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  bool found_two = false;

  for (std::size_t num_bins = 2; num_bins <= 5 && !found_two; ++num_bins) {
    const double bin_width = d[n - 1] / static_cast<double>(num_bins);
    // One per mille of slack keeps the maximum inside the top bin.
    double th = 1.001 * bin_width;
    std::size_t bin = 0;
    first[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ops.add(1);
      if (d[i] > th && bin + 1 < num_bins) {
        th += bin_width;
        ++bin;
        first[bin] = i;
      }
      last[bin] = i;
    }
    // A bin is a candidate when even its extremes look like one class.
    int candidates = 0;
    bool have_first = false;
    for (std::size_t b = 0; b <= bin; ++b) {
      ops.add(1);
      if (d[first[b]] * 2.0 > d[last[b]]) {
        ++candidates;
        if (!have_first) {
          b1 = b;
          have_first = true;
        }
        b2 = b;
      }
    }
    found_two = candidates > 1;
  }

  if (!found_two) {
    // Every partition exposed one plausible bin at most; the maximum is
    // assumed to be the only good distance.
    out.ref_idx = n - 1;
    out.d_ref = d[n - 1];
    return out;
  }

  const std::size_t combined = last[b2] - first[b1] + 1;
  out.ref_idx = first[b1] + (combined >> 1);
  if (b2 == b1 + 1) {
    if (d[first[b1]] * 2.0 > d[last[b2]]) {
      // Both bins merged still look like one class; average them.
      double sum = 0.0;
      for (std::size_t i = first[b1]; i <= last[b2]; ++i) {
        ops.add(1);
        sum += d[i];
      }
      out.d_ref = sum / static_cast<double>(combined);
    } else {
      out.d_ref = d[out.ref_idx];
    }
  } else {
    // Non-adjacent candidate bins: anchor on the higher bin's median.
    const std::size_t num = last[b2] - first[b2];
    out.ref_idx = first[b2] + (num >> 1);
    out.d_ref = d[out.ref_idx];
  }
  return out;
}

TypicalDistance typical_distance_impl(const std::vector<double>& d,
                                      double d_ref, std::size_t ref_idx,
                                      OpCounter ops) {
  TypicalDistance t;
  t.d_ref = d_ref;
  t.ref_idx = ref_idx;
  const std::size_t n = d.size();
  if (n == 0) return t;

  // When the reference sits at the second-highest distance but the maximum
  // dwarfs it, the maximum is likely the only good distance.
  if (n >= 2 && t.ref_idx == n - 2 && t.d_ref * 3.1 < d[n - 1]) {
    t.ref_idx = n - 1;
    t.d_ref = d[n - 1];
  }

  t.long_distance_flag =
      d[n - 1] > t.d_ref * 2.0 && d[n - 1] < t.d_ref * 3.1;

  t.good_idx = 0;
  for (std::size_t i = t.ref_idx; i-- > 0;) {
    ops.add(1);
    if (d[i] * 2.3 < t.d_ref) {
      t.good_idx = i + 1;
      break;
    }
  }

  t.num_good = n - t.good_idx;
  const std::size_t half = t.num_good >> 1;
  const double median =
      (t.num_good % 2 == 1)
          ? d[t.good_idx + half]
          : 0.5 * (d[t.good_idx + half] + d[t.good_idx + half - 1]);

  double sum = 0.0;
  for (std::size_t i = t.good_idx; i < n; ++i) {
    ops.add(1);
    sum += d[i];
  }
  // A long distance spans a skipped half-wave, so it represents two good
  // distances in the mean.
  const double divisor = static_cast<double>(
      t.long_distance_flag ? t.num_good + 1 : t.num_good);
  t.d_typ = 0.5 * (median + sum / divisor);
  return t;
}

DistanceSelection select_best_distance_impl(const CrossingSet& crossings,
                                            double x_first, double x_last,
                                            OpCounter ops) {
  DistanceSelection sel;
  const auto& c = crossings.positions;
  if (c.size() <= 1) {
    sel.single_crossing = true;
    return sel;
  }

  std::vector<double> dist(c.size() - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    ops.add(1);
    dist[i] = c[i + 1] - c[i];
    sum += dist[i];
  }
  // Crossings confined to a small part of the record contradict a full
  // oscillation; treat as a fraction of one wave.
  if (dist.size() > 1 && sum < (x_last - x_first) / 3.0) {
    sel.single_crossing = true;
    return sel;
  }

  std::sort(dist.begin(), dist.end(), [&ops](double a, double b) {
    ops.add(1);
    return a < b;
  });

  DistanceAnalysis& a = sel.analysis;
  a.distances = std::move(dist);
  const auto& d = a.distances;
  const std::size_t n = d.size();

  if (d[0] * 2.0 > d[n - 1]) {
    // No outliers; the plain average represents the half-period.
    a.d_star = sum / static_cast<double>(n);
    a.d_typ = a.d_star;
    a.d_ref = d[0];
    a.ref_idx = 0;
    a.num_good = n;
    return sel;
  }

  a.used_three_step = true;
  const ReferenceDistance ref = reference_distance_impl(d, ops);
  const TypicalDistance typ =
      typical_distance_impl(d, ref.d_ref, ref.ref_idx, ops);
  a.d_ref = typ.d_ref;
  a.ref_idx = typ.ref_idx;
  a.d_typ = typ.d_typ;
  a.num_good = typ.num_good;
  a.long_distance_flag = typ.long_distance_flag;
  for (std::size_t i = 0; i < typ.good_idx; ++i) {
    ops.add(1);
    a.sum_spurious += d[i];
  }
  const double correction = a.sum_spurious / static_cast<double>(a.num_good);
  a.d_star = a.d_typ + std::min(correction, a.d_typ);
  return sel;
}

}  // namespace

SignalStats prepare_stats(const SampledSignal& s) {
  check_signal(s);
  const std::size_t n = s.size();

  SignalStats st;
  st.y_max = s.y[0];
  st.y_min = s.y[0];
  st.idx_max = 0;
  st.idx_min = 0;
  // Seeding at the middle sample keeps the inner extrema defined even when
  // jitter leaves the window empty.
  const std::size_t mid = n / 2 - 1;
  st.y_max2 = s.y[mid];
  st.y_min2 = s.y[mid];
  st.idx_max2 = mid;
  st.idx_min2 = mid;

  const double range = s.x[n - 1] - s.x[0];
  const double mid_low = s.x[0] + range * 0.333;
  const double mid_high = s.x[0] + range * 0.667;

  double sum = s.y[0];
  for (std::size_t i = 1; i < n; ++i) {
    sum += s.y[i];
    if (s.y[i] > st.y_max) {
      st.y_max = s.y[i];
      st.idx_max = i;
    }
    if (s.y[i] < st.y_min) {
      st.y_min = s.y[i];
      st.idx_min = i;
    }
    if (s.x[i] >= mid_low && s.x[i] <= mid_high) {
      ++st.count_mid;
      if (s.y[i] > st.y_max2) {
        st.y_max2 = s.y[i];
        st.idx_max2 = i;
      }
      if (s.y[i] < st.y_min2) {
        st.y_min2 = s.y[i];
        st.idx_min2 = i;
      }
    }
  }
  st.a1_hat = sum / static_cast<double>(n);
  st.a2_hat = 0.5 * (st.y_max - st.y_min);
  return st;
}

SampledSignal remove_spikes(const SampledSignal& s, double a1_hat) {
  return remove_spikes_impl(s, a1_hat, {});
}

CrossingSet find_crossings(const SampledSignal& s, double a1_hat) {
  return find_crossings_impl(s, a1_hat, {});
}

ReferenceDistance get_reference_distance(
    const std::vector<double>& sorted_distances) {
  return reference_distance_impl(sorted_distances, {});
}

TypicalDistance get_typical_distance(const std::vector<double>& sorted_distances,
                                     double d_ref, std::size_t ref_idx) {
  return typical_distance_impl(sorted_distances, d_ref, ref_idx, {});
}

DistanceSelection select_best_distance(const CrossingSet& crossings,
                                       double x_first, double x_last) {
  return select_best_distance_impl(crossings, x_first, x_last, {});
}

double estimate_frequency(const DistanceSelection& sel, double x_first,
                          double x_last) {
  if (sel.single_crossing) {
    const double span = x_last - x_first;
    if (span <= 0.0)
      throw std::domain_error("estimate_frequency: degenerate x span");
    return std::numbers::pi / span;
  }
  if (sel.analysis.d_star <= 0.0)
    throw std::domain_error("estimate_frequency: non-positive distance");
  return std::numbers::pi / sel.analysis.d_star;
}

double estimate_phase(const SampledSignal& s, const SignalStats& stats,
                      double a3_hat, double d_star) {
  const double span = s.x.back() - s.x.front();
  const double covered = d_star > 0.0 ? span / (2.0 * d_star) : 0.0;
  // Anchoring at an inner extremum avoids phase errors amplifying across
  // the record, but needs a well-sampled inner period to be reliable.
  const bool inner =
      s.size() >= 10 && stats.count_mid >= 10 && covered >= 3.0;

  const double y_max = inner ? stats.y_max2 : stats.y_max;
  const double y_min = inner ? stats.y_min2 : stats.y_min;
  const double x_at_max = s.x[inner ? stats.idx_max2 : stats.idx_max];
  const double x_at_min = s.x[inner ? stats.idx_min2 : stats.idx_min];

  if (y_max - stats.a1_hat > stats.a1_hat - y_min)
    return wrap_phase(-a3_hat * x_at_max);
  return wrap_phase(std::numbers::pi - a3_hat * x_at_min);
}

InitialEstimate estimate_initial(const SampledSignal& s) {
  check_signal(s);
  InitialEstimate est;
  est.raw_stats = prepare_stats(s);

  OpCounter ops{&est.freq_ops};
  const SampledSignal cleaned =
      remove_spikes_impl(s, est.raw_stats.a1_hat, ops);
  est.clean_stats = prepare_stats(cleaned);
  est.crossings = find_crossings_impl(cleaned, est.raw_stats.a1_hat, ops);
  est.selection =
      select_best_distance_impl(est.crossings, s.x.front(), s.x.back(), ops);

  const double a3 = estimate_frequency(est.selection, s.x.front(), s.x.back());
  est.d_star = est.selection.single_crossing ? s.x.back() - s.x.front()
                                             : est.selection.analysis.d_star;
  const double a4 = estimate_phase(cleaned, est.clean_stats, a3, est.d_star);

  est.params =
      ModelParams{est.raw_stats.a1_hat, est.raw_stats.a2_hat, a3, a4};
  return est;
}

ModelParams estimate_initial_params(const SampledSignal& s) {
  return estimate_initial(s).params;
}

}  // namespace fipeft
