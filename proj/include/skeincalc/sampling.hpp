#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skeincalc/multiseg.hpp"

namespace skeincalc::sampling {

/// splitmix64: tiny, deterministic across platforms, good enough for
/// property sweeps.  Seeded suites must document their seed.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline multiseg::StartAreaSeq random_start_area_seq(Rng& rng, const multiseg::SlopeK& k,
                                                    long long max_entry = 6) {
  multiseg::StartAreaSeq seq;
  seq.b.resize(static_cast<std::size_t>(k.n0));
  for (auto& entry : seq.b) entry = rng.range(0, max_entry);
  if (seq.total() == 0) seq.b[static_cast<std::size_t>(rng.range(0, k.n0 - 1))] = 1;
  return seq;
}

/// Random right-ordered k-narrow multisegment: up to three lines, each with
/// exponents confined to an n0-wide window and sorted, lines interleaved by
/// a deterministic round-robin.
inline multiseg::Multisegment random_right_ordered_k_narrow(Rng& rng,
                                                            const multiseg::SlopeK& k,
                                                            long long max_size = 12) {
  static const char* kLineNames[] = {"A", "B", "C"};
  for (;;) {
    long long line_count = rng.range(1, 3);
    std::vector<std::vector<multiseg::Segment>> lines;
    long long total = 0;
    for (long long li = 0; li < line_count; ++li) {
      long long seg_count = rng.range(1, 3);
      long long base = rng.range(-2, 2);
      std::vector<multiseg::Segment> segs;
      for (long long si = 0; si < seg_count; ++si) {
        long long z = base + rng.range(0, k.n0 - 1);
        long long len = rng.range(1, 4);
        total += len;
        segs.push_back({multiseg::Start{kLineNames[li], z}, len});
      }
      std::stable_sort(segs.begin(), segs.end(),
                       [](const multiseg::Segment& a, const multiseg::Segment& b) {
                         if (a.start.z != b.start.z) return a.start.z < b.start.z;
                         return a.len < b.len;
                       });
      lines.push_back(std::move(segs));
    }
    if (total > max_size) continue;
    // interleave lines, preserving each line's internal order
    std::vector<multiseg::Segment> merged;
    std::vector<std::size_t> cursor(lines.size(), 0);
    while (true) {
      std::vector<std::size_t> open;
      for (std::size_t li = 0; li < lines.size(); ++li)
        if (cursor[li] < lines[li].size()) open.push_back(li);
      if (open.empty()) break;
      std::size_t pick = open[static_cast<std::size_t>(
          rng.range(0, static_cast<long long>(open.size()) - 1))];
      merged.push_back(lines[pick][cursor[pick]++]);
    }
    multiseg::Multisegment ms(k, std::move(merged));
    if (!multiseg::is_right_ordered(ms) || !multiseg::is_k_narrow(ms))
      throw consistency_error("random_right_ordered_k_narrow: generator invariant broken");
    return ms;
  }
}

inline const std::vector<multiseg::SlopeK>& standard_slopes() {
  static const std::vector<multiseg::SlopeK> slopes = {
      multiseg::SlopeK(1, 1), multiseg::SlopeK(2, 1), multiseg::SlopeK(3, 1),
      multiseg::SlopeK(3, 2), multiseg::SlopeK(5, 2), multiseg::SlopeK(7, 3)};
  return slopes;
}

}  // namespace skeincalc::sampling
