#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeincalc/errors.hpp"
#include "skeincalc/partdom.hpp"
#include "skeincalc/partition.hpp"

namespace skeincalc::multiseg {

/// The slope k = n0/N0 in lowest terms.  The start exponents of a
/// multisegment live on the t^{2/N0} grid, and k-narrowness bounds their
/// spread by n0.
struct SlopeK {
  long long n0, N0;

  SlopeK(long long num, long long den) : n0(num), N0(den) {
    if (n0 < 1 || N0 < 1) throw input_error("SlopeK: n0 and N0 must be >= 1");
    if (std::gcd(n0, N0) != 1) throw input_error("SlopeK: n0/N0 must be in lowest terms");
  }

  long long floor_k() const { return n0 / N0; }

  friend bool operator==(const SlopeK&, const SlopeK&) = default;

  std::string to_string() const {
    return std::to_string(n0) + (N0 == 1 ? "" : "/" + std::to_string(N0));
  }
};

/// A start: an opaque t^{2/N0}-line identifier plus the exponent z, so the
/// start equals (line base) * t^{2z/N0}.  Distinct line identifiers are
/// declared to lie on distinct t^{2/N0}-lines.
struct Start {
  std::string line;
  long long z = 0;

  friend bool operator==(const Start&, const Start&) = default;
  friend auto operator<=>(const Start&, const Start&) = default;
};

struct Segment {
  Start start;
  long long len = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ordered tuple of segments sharing a slope context.  Zero-length
/// placeholder segments are allowed in transit and dropped by normalized().
class Multisegment {
 public:
  explicit Multisegment(SlopeK slope, std::vector<Segment> segs = {})
      : slope_(slope), segs_(std::move(segs)) {
    for (const Segment& s : segs_)
      if (s.len < 0) throw input_error("Multisegment: negative segment length");
  }

  const SlopeK& slope() const { return slope_; }
  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t count() const { return segs_.size(); }

  long long size() const {
    long long total = 0;
    for (const Segment& s : segs_) total += s.len;
    return total;
  }

  Multisegment normalized() const {
    std::vector<Segment> out;
    for (const Segment& s : segs_)
      if (s.len > 0) out.push_back(s);
    return Multisegment(slope_, std::move(out));
  }

  Composition composition() const {
    std::vector<long long> parts;
    for (const Segment& s : segs_) parts.push_back(s.len);
    return Composition(std::move(parts));  // zero parts dropped there
  }

  long long area(const Start& a) const {
    long long total = 0;
    for (const Segment& s : segs_)
      if (s.start == a) total += s.len;
    return total;
  }

  Multisegment concat(const Multisegment& other) const {
    if (!(slope_ == other.slope_)) throw input_error("Multisegment::concat: slope mismatch");
    std::vector<Segment> out = segs_;
    out.insert(out.end(), other.segs_.begin(), other.segs_.end());
    return Multisegment(slope_, std::move(out));
  }

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

  std::string to_string() const {
    std::string s = "{k=" + slope_.to_string();
    for (const Segment& seg : segs_)
      s += " <" + seg.start.line + "," + std::to_string(seg.start.z) + ";" +
           std::to_string(seg.len) + ">";
    return s + "}";
  }

 private:
  SlopeK slope_;
  std::vector<Segment> segs_;
};

inline bool same_t2_line(const SlopeK& slope, const Start& a, const Start& b) {
  return a.line == b.line && (a.z - b.z) % slope.N0 == 0;
}

/// Right-ordered: on every t^2-line the exponents weakly increase along the
/// tuple, and equal starts carry weakly increasing lengths.
inline bool is_right_ordered(const Multisegment& ms) {
  const auto& segs = ms.segments();
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!same_t2_line(ms.slope(), segs[i].start, segs[j].start)) continue;
      if (segs[j].start.z < segs[i].start.z) return false;
      if (segs[j].start.z == segs[i].start.z && segs[i].len > segs[j].len) return false;
    }
  return true;
}

namespace detail {
/// key identifying the t^2-line of a start: line id plus residue of z
inline std::pair<std::string, long long> t2_line_key(const SlopeK& slope, const Start& a) {
  long long r = a.z % slope.N0;
  if (r < 0) r += slope.N0;
  return {a.line, r};
}
}  // namespace detail

/// Equivalence: the permutations relating the two tuples may only invert
/// pairs on distinct t^2-lines, which happens exactly when the per-t^2-line
/// subsequences coincide.
inline bool equivalent(const Multisegment& a, const Multisegment& b) {
  if (!(a.slope() == b.slope())) throw input_error("equivalent: slope mismatch");
  using Key = std::pair<std::string, long long>;
  std::map<Key, std::vector<Segment>> lines_a, lines_b;
  for (const Segment& s : a.segments())
    lines_a[detail::t2_line_key(a.slope(), s.start)].push_back(s);
  for (const Segment& s : b.segments())
    lines_b[detail::t2_line_key(b.slope(), s.start)].push_back(s);
  return lines_a == lines_b;
}

/// s-narrowness.  The multisegment's exponents live on the t^{2/N0} grid;
/// testing against a slope s = p0/Q0 requires Q0 | N0 (the s-grid must be
/// coarser).  A same-line pair participates when its exponent gap is a
/// multiple of N0/Q0, and the gap measured in s-grid steps must stay below
/// p0.
inline bool is_s_narrow(const Multisegment& ms, const SlopeK& s) {
  if (ms.slope().N0 % s.N0 != 0)
    throw input_error("is_s_narrow: slope denominator mismatch (" + s.to_string() +
                      " vs grid " + ms.slope().to_string() + ")");
  long long step = ms.slope().N0 / s.N0;
  const auto& segs = ms.segments();
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].start.line != segs[j].start.line) continue;
      long long gap = segs[i].start.z - segs[j].start.z;
      if (gap % step != 0) continue;
      if (std::llabs(gap / step) >= s.n0) return false;
    }
  return true;
}

inline bool is_k_narrow(const Multisegment& ms) { return is_s_narrow(ms, ms.slope()); }

/// Sufficient (one-directional) simplicity criterion: 1-narrow
/// multisegments have simple standard modules.
inline bool is_M_simple(const Multisegment& ms) { return is_s_narrow(ms, SlopeK(1, 1)); }

/// Eigenvalue list of the one-dimensional representation attached to the
/// multisegment: segment <a; l> contributes a, a t^{-2}, ..., i.e. exponents
/// z, z - N0, ..., z - (l-1) N0 on a's line.
inline std::vector<Start> rho_eigenvalues(const Multisegment& ms) {
  std::vector<Start> out;
  for (const Segment& s : ms.segments())
    for (long long i = 0; i < s.len; ++i)
      out.push_back(Start{s.start.line, s.start.z - i * ms.slope().N0});
  return out;
}

/// Maximal same-line sub-multisegments, in order of first appearance,
/// preserving the internal order of each line.
inline std::vector<std::pair<std::string, Multisegment>> group_by_line(const Multisegment& ms) {
  std::vector<std::pair<std::string, std::vector<Segment>>> groups;
  for (const Segment& s : ms.segments()) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == s.start.line; });
    if (it == groups.end()) {
      groups.emplace_back(s.start.line, std::vector<Segment>{s});
    } else {
      it->second.push_back(s);
    }
  }
  std::vector<std::pair<std::string, Multisegment>> out;
  for (auto& [line, segs] : groups)
    out.emplace_back(line, Multisegment(ms.slope(), std::move(segs)));
  return out;
}

/// Sequence of start areas of a single-line multisegment: entry j is the
/// total length at exponent (min z) + j.  Requires the spread to fit inside
/// n0 slots (k-narrowness on the line).
struct StartAreaSeq {
  std::vector<long long> b;  // length n0

  long long total() const { return std::accumulate(b.begin(), b.end(), 0LL); }

  friend bool operator==(const StartAreaSeq&, const StartAreaSeq&) = default;
};

inline StartAreaSeq start_area_sequence(const Multisegment& line_ms) {
  if (line_ms.empty()) throw input_error("start_area_sequence: empty line");
  const SlopeK& k = line_ms.slope();
  const std::string& id = line_ms.segments().front().start.line;
  long long min_z = line_ms.segments().front().start.z;
  long long max_z = min_z;
  for (const Segment& s : line_ms.segments()) {
    if (s.start.line != id) throw input_error("start_area_sequence: multiple lines");
    min_z = std::min(min_z, s.start.z);
    max_z = std::max(max_z, s.start.z);
  }
  if (max_z - min_z >= k.n0)
    throw input_error("start_area_sequence: line spread is not k-narrow");
  StartAreaSeq seq;
  seq.b.assign(static_cast<std::size_t>(k.n0), 0);
  for (const Segment& s : line_ms.segments())
    seq.b[static_cast<std::size_t>(s.start.z - min_z)] += s.len;
  return seq;
}

/// The pi-shift on one line: removes the line's leading minimal-exponent
/// block and re-appends those segments at the end of the tuple with z
/// raised by n0.  On a k-narrow line this rotates the start-area sequence
/// one step left.
inline Multisegment pi_shift_line(const Multisegment& ms, const std::string& line) {
  long long min_z = 0;
  bool found = false;
  for (const Segment& s : ms.segments())
    if (s.start.line == line) {
      min_z = found ? std::min(min_z, s.start.z) : s.start.z;
      found = true;
    }
  if (!found) throw input_error("pi_shift_line: no segments on line " + line);
  // the line's leading run must be its minimal-z block
  bool block_open = true;
  std::vector<Segment> kept, shifted;
  for (const Segment& s : ms.segments()) {
    if (s.start.line != line) {
      kept.push_back(s);
      continue;
    }
    if (block_open && s.start.z == min_z) {
      shifted.push_back(Segment{Start{line, s.start.z + ms.slope().n0}, s.len});
    } else {
      if (s.start.z == min_z)
        throw input_error("pi_shift_line: minimal-z block is not a prefix of the line");
      block_open = false;
      kept.push_back(s);
    }
  }
  kept.insert(kept.end(), shifted.begin(), shifted.end());
  return Multisegment(ms.slope(), std::move(kept));
}

/// Stable per-line sort by (z, len), keeping each line's positions within
/// the tuple.  On a right-ordered input this only permutes segments across
/// distinct t^2-lines, hence is an equivalence.
inline Multisegment normalize_within_lines(const Multisegment& ms) {
  std::map<std::string, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < ms.segments().size(); ++i)
    positions[ms.segments()[i].start.line].push_back(i);
  std::vector<Segment> out = ms.segments();
  for (const auto& [line, idxs] : positions) {
    std::vector<Segment> segs;
    for (std::size_t i : idxs) segs.push_back(ms.segments()[i]);
    std::stable_sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
      if (a.start.z != b.start.z) return a.start.z < b.start.z;
      return a.len < b.len;
    });
    for (std::size_t p = 0; p < idxs.size(); ++p) out[idxs[p]] = segs[p];
  }
  return Multisegment(ms.slope(), std::move(out));
}

/// Linkage test for two segments on one t^2-line, the second start sitting
/// z full t^2-steps above the first (z > 0): linked exactly when
/// p >= z >= p - l + 1 for lengths l = first, p = second.
inline bool is_linked(const SlopeK& slope, const Segment& s1, const Segment& s2) {
  if (!same_t2_line(slope, s1.start, s2.start))
    throw input_error("is_linked: segments on distinct t^2-lines");
  long long z = (s2.start.z - s1.start.z) / slope.N0;
  if (z <= 0) return false;
  return s2.len >= z && z >= s2.len - s1.len + 1;
}

/// Exchange move on a linked pair: lengths (l, p) at gap z become
/// (p - z, z + l), dropping the first segment when it empties.  Unlinked
/// pairs come back unchanged.
inline Multisegment link(const SlopeK& slope, const Segment& s1, const Segment& s2) {
  if (!is_linked(slope, s1, s2)) return Multisegment(slope, {s1, s2});
  long long z = (s2.start.z - s1.start.z) / slope.N0;
  Segment first{s1.start, s2.len - z};
  Segment second{s2.start, z + s1.len};
  if (first.len == 0) return Multisegment(slope, {second});
  return Multisegment(slope, {first, second});
}

namespace detail {
/// one pass of greedy linking: normalize, link the first linked same-
/// t^2-line pair, repeat until none remains.  Terminates because each link
/// strictly increases the sum of squared lengths.
inline Multisegment link_pass(Multisegment ms) {
  for (;;) {
    ms = normalize_within_lines(ms);
    const auto& segs = ms.segments();
    bool applied = false;
    for (std::size_t i = 0; i < segs.size() && !applied; ++i) {
      for (std::size_t j = i + 1; j < segs.size() && !applied; ++j) {
        if (!same_t2_line(ms.slope(), segs[i].start, segs[j].start)) continue;
        if (segs[j].start.z <= segs[i].start.z) continue;
        if (!is_linked(ms.slope(), segs[i], segs[j])) continue;
        Multisegment pair = link(ms.slope(), segs[i], segs[j]);
        std::vector<Segment> out;
        for (std::size_t p = 0; p < segs.size(); ++p) {
          if (p == i) {
            if (pair.count() == 2) out.push_back(pair.segments()[0]);
          } else if (p == j) {
            out.push_back(pair.segments().back());
          } else {
            out.push_back(segs[p]);
          }
        }
        ms = Multisegment(ms.slope(), std::move(out));
        applied = true;
      }
    }
    if (!applied) return ms;
  }
}

inline std::optional<std::string> first_wide_line(const Multisegment& ms) {
  std::vector<std::string> seen;
  for (const auto& [line, sub] : group_by_line(ms)) {
    long long min_z = sub.segments().front().start.z, max_z = min_z;
    for (const Segment& s : sub.segments()) {
      min_z = std::min(min_z, s.start.z);
      max_z = std::max(max_z, s.start.z);
    }
    if (max_z - min_z >= ms.slope().n0) return line;
  }
  return std::nullopt;
}
}  // namespace detail

struct ShiftRecord {
  std::string stage;  // "narrow" or "decompose"
  std::string line;
  long long count = 0;

  friend bool operator==(const ShiftRecord&, const ShiftRecord&) = default;
};

/// Shift-and-link iteration producing a right-ordered k-narrow
/// multisegment: while some line spreads over at least n0 exponent slots,
/// rotate its minimal block up by n0 and greedily resolve any linked pairs
/// this creates.  Each round strictly shrinks the offending line's spread,
/// so the iteration terminates.  The output's starts are always among the
/// shifted input starts; a k-narrow input is returned untouched.
inline Multisegment narrow_to_k(const Multisegment& input,
                                std::vector<ShiftRecord>* log = nullptr) {
  if (!is_right_ordered(input)) throw input_error("narrow_to_k: input is not right-ordered");
  Multisegment ms = input.normalized();
  if (!detail::first_wide_line(ms)) return input;
  for (;;) {
    auto wide = detail::first_wide_line(ms);
    if (!wide) return ms;
    ms = normalize_within_lines(ms);
    ms = pi_shift_line(ms, *wide);
    ms = detail::link_pass(ms);
    if (log) {
      if (!log->empty() && log->back().stage == "narrow" && log->back().line == *wide)
        ++log->back().count;
      else
        log->push_back({"narrow", *wide, 1});
    }
  }
}

/// Cyclic window maximization behind the averaging bound: the window of
/// length l*N0 (capped at the full circle) with the largest area sum,
/// smallest offset winning ties.  The winner always satisfies
/// W(g) >= total * l / k, exactly.
struct WindowChoice {
  long long offset = 0;
  long long window_sum = 0;
};

inline WindowChoice find_good_cyclic_shift(const StartAreaSeq& seq, long long ell,
                                           const SlopeK& k) {
  if (ell < 1) throw input_error("find_good_cyclic_shift: l must be >= 1");
  if (ell * k.N0 > k.n0)
    throw input_error("find_good_cyclic_shift: requires l <= k");
  if (static_cast<long long>(seq.b.size()) != k.n0)
    throw input_error("find_good_cyclic_shift: sequence length must be n0");
  long long window = ell * k.N0;
  WindowChoice best;
  if (window >= k.n0) {
    best.window_sum = seq.total();
  } else {
    for (long long g = 0; g < k.n0; ++g) {
      long long sum = 0;
      for (long long d = 0; d < window; ++d)
        sum += seq.b[static_cast<std::size_t>((g + d) % k.n0)];
      if (g == 0 || sum > best.window_sum) {
        best.offset = g;
        best.window_sum = sum;
      }
    }
  }
  // averaging bound, exact: best * n0 >= total * l * N0
  if (best.window_sum * k.n0 < seq.total() * ell * k.N0)
    throw consistency_error("find_good_cyclic_shift: averaging bound failed");
  return best;
}

struct Decomposition {
  Multisegment a, b;
  std::vector<ShiftRecord> shifts;
};

/// Rotate every line to its best window and split each line's segments into
/// the first l*N0 exponent slots (A) and the rest (B).  Guarantees: A is
/// l-narrow, |A| >= |Delta| * l / k >= l*m, A||B is right-ordered, and each
/// line's start-area sequence is a cyclic shift of the input's.
inline Decomposition decompose_AB(const Multisegment& input, long long m) {
  const SlopeK& k = input.slope();
  long long ell = k.floor_k();
  if (ell < 1) throw input_error("decompose_AB: requires k >= 1");
  if (m < 1) throw input_error("decompose_AB: m must be >= 1");
  if (!is_right_ordered(input)) throw input_error("decompose_AB: input is not right-ordered");
  if (!is_k_narrow(input)) throw input_error("decompose_AB: input is not k-narrow");
  if (m * k.n0 > input.size() * k.N0)
    throw input_error("decompose_AB: m exceeds |Delta| / k");

  Multisegment ms = normalize_within_lines(input.normalized());
  std::vector<ShiftRecord> shifts;
  long long window = ell * k.N0;
  // Window anchors stay on the rotated grid origin (original minimum plus
  // the offset), not on the smallest occupied slot: the chosen window may
  // begin with empty slots and sliding past them would forfeit its
  // guaranteed area.
  std::map<std::string, long long> anchor;
  for (const auto& [line, sub] : group_by_line(ms)) {
    long long min_z = sub.segments().front().start.z;
    for (const Segment& s : sub.segments()) min_z = std::min(min_z, s.start.z);
    StartAreaSeq seq = start_area_sequence(sub);
    WindowChoice choice = find_good_cyclic_shift(seq, ell, k);
    long long g = choice.offset;
    if (window < k.n0) {
      // A shift advances the anchor to the next occupied slot, so an
      // empty-slot offset is not realizable; the next occupied anchor has a
      // window sum at least as large, so the bound survives the move.
      while (seq.b[static_cast<std::size_t>(g)] == 0) g = (g + 1) % k.n0;
    } else {
      g = 0;
    }
    // one shift per occupied slot strictly below the chosen anchor
    long long steps = 0;
    for (long long s = 0; s < g; ++s)
      if (seq.b[static_cast<std::size_t>(s)] > 0) ++steps;
    anchor[line] = min_z + g;
    if (steps > 0) shifts.push_back({"decompose", line, steps});
    for (long long step = 0; step < steps; ++step) ms = pi_shift_line(ms, line);
  }

  std::vector<Segment> a_segs, b_segs;
  for (const Segment& s : ms.segments()) {
    if (s.start.z - anchor[s.start.line] < window) a_segs.push_back(s);
    else b_segs.push_back(s);
  }
  Decomposition out{Multisegment(k, std::move(a_segs)), Multisegment(k, std::move(b_segs)),
                    std::move(shifts)};
  out.a = normalize_within_lines(out.a);
  out.b = normalize_within_lines(out.b);

  if (!is_s_narrow(out.a, SlopeK(ell, 1)))
    throw consistency_error("decompose_AB: A is not l-narrow");
  if (out.a.size() * k.n0 < input.size() * ell * k.N0)
    throw consistency_error("decompose_AB: |A| fell below the averaging bound");
  if (out.a.size() + out.b.size() != input.size())
    throw consistency_error("decompose_AB: size not conserved");
  if (!is_right_ordered(out.a.concat(out.b)))
    throw consistency_error("decompose_AB: A||B is not right-ordered");
  return out;
}

/// Regroup an l-narrow multisegment into l pieces, piece j collecting the
/// segments sitting j-1 full t^2-steps above their t^2-line's minimum.
/// Every piece is 1-narrow (its same-t^2-line starts are equal).
struct EllSplit {
  std::vector<Multisegment> pieces;  // exactly l entries, possibly empty
  Composition alpha;                 // piece sizes, zero parts dropped
};

inline EllSplit split_ell_narrow(const Multisegment& a, long long ell) {
  if (ell < 1) throw input_error("split_ell_narrow: l must be >= 1");
  if (!is_s_narrow(a, SlopeK(ell, 1)))
    throw input_error("split_ell_narrow: input is not l-narrow");
  const SlopeK& k = a.slope();
  using Key = std::pair<std::string, long long>;
  std::map<Key, long long> base;
  for (const Segment& s : a.segments()) {
    Key key = detail::t2_line_key(k, s.start);
    auto it = base.find(key);
    if (it == base.end() || s.start.z < it->second) base[key] = s.start.z;
  }
  std::vector<std::vector<Segment>> buckets(static_cast<std::size_t>(ell));
  for (const Segment& s : a.segments()) {
    long long idx = (s.start.z - base[detail::t2_line_key(k, s.start)]) / k.N0;
    if (idx < 0 || idx >= ell)
      throw consistency_error("split_ell_narrow: slot index escaped the window");
    buckets[static_cast<std::size_t>(idx)].push_back(s);
  }
  EllSplit out{{}, Composition()};
  std::vector<long long> sizes;
  for (auto& bucket : buckets) {
    Multisegment piece(k, std::move(bucket));
    if (!is_s_narrow(piece, SlopeK(1, 1)))
      throw consistency_error("split_ell_narrow: piece is not 1-narrow");
    sizes.push_back(piece.size());
    out.pieces.push_back(std::move(piece));
  }
  out.alpha = Composition(std::move(sizes));
  return out;
}

/// A recorded dominance or survival fact inside a certificate.
struct CertFact {
  std::string name;
  bool holds = false;

  friend bool operator==(const CertFact&, const CertFact&) = default;
};

/// Auditable record of the narrowing/splitting pipeline certifying that
/// the rectangular sign idempotent e_{m^j} survives on the module indexed
/// by the input multisegment.  replay() reruns the deterministic pipeline
/// and re-verifies every recorded fact.
struct SurvivalCertificate {
  Multisegment input;
  long long m = 0, j = 0;
  std::vector<ShiftRecord> shifts;
  Multisegment gamma;  // A || B after shifting
  Multisegment a_part, b_part;
  Composition alpha, beta;
  Partition lambda;
  std::vector<CertFact> facts;
  bool valid = false;

  bool all_facts_hold() const {
    for (const CertFact& f : facts)
      if (!f.holds) return false;
    return true;
  }
};

inline SurvivalCertificate certificate_e_mj(const Multisegment& input, long long m,
                                            long long j) {
  const SlopeK& k = input.slope();
  long long ell = k.floor_k();
  if (ell < 1) throw input_error("certificate_e_mj: requires k >= 1");
  if (m < 1 || j < 1) throw input_error("certificate_e_mj: m and j must be >= 1");
  if (j > ell)
    throw input_error("certificate_e_mj: hypothesis j <= floor(k) violated (j=" +
                      std::to_string(j) + ", floor(k)=" + std::to_string(ell) + ")");
  if (m * k.n0 > input.size() * k.N0)
    throw input_error("certificate_e_mj: hypothesis m <= |Delta|/k violated (m=" +
                      std::to_string(m) + ", |Delta|/k=" + std::to_string(input.size()) + "*" +
                      std::to_string(k.N0) + "/" + std::to_string(k.n0) + ")");
  if (!is_right_ordered(input))
    throw input_error("certificate_e_mj: input is not right-ordered");

  std::vector<ShiftRecord> shifts;
  Multisegment narrowed = narrow_to_k(input.normalized(), &shifts);
  Decomposition dec = decompose_AB(narrowed, m);
  shifts.insert(shifts.end(), dec.shifts.begin(), dec.shifts.end());
  EllSplit split = split_ell_narrow(dec.a, ell);
  Composition alpha = split.alpha;
  Composition beta = dec.b.composition();

  long long n = input.size();
  Composition joined = alpha.concat(beta);
  Partition lambda = transpose(sort_to_partition(joined));

  std::vector<CertFact> facts;
  facts.push_back({"alpha_has_at_most_l_parts",
                   static_cast<long long>(alpha.length()) <= ell});
  facts.push_back({"alpha_total_at_least_lm", alpha.size() >= ell * m});
  facts.push_back(
      {"rect_dominated_by_sorted_alpha_beta",
       dominated_by(sort_to_partition(Composition::rect_and_ones(m, ell, n - ell * m)),
                    sort_to_partition(joined))});
  facts.push_back({"alpha_beta_survives_on_lambda", partdom::sign_survives(joined, lambda)});
  facts.push_back(
      {"target_rect_survives_on_lambda",
       partdom::sign_survives(Composition::rect_and_ones(m, j, n - j * m), lambda)});
  bool valid = true;
  for (const CertFact& f : facts) valid = valid && f.holds;

  return SurvivalCertificate{input,
                             m,
                             j,
                             std::move(shifts),
                             dec.a.concat(dec.b),
                             std::move(dec.a),
                             std::move(dec.b),
                             std::move(alpha),
                             std::move(beta),
                             std::move(lambda),
                             std::move(facts),
                             valid};
}

/// Re-run the pipeline on the certificate's input and require bit-exact
/// agreement with the recorded data, then re-verify the recorded facts.
inline bool replay_certificate(const SurvivalCertificate& cert) {
  SurvivalCertificate fresh = certificate_e_mj(cert.input, cert.m, cert.j);
  return fresh.gamma == cert.gamma && fresh.a_part == cert.a_part &&
         fresh.b_part == cert.b_part && fresh.alpha == cert.alpha &&
         fresh.beta == cert.beta && fresh.shifts == cert.shifts &&
         fresh.lambda == cert.lambda && fresh.facts == cert.facts &&
         fresh.valid == cert.valid;
}

}  // namespace skeincalc::multiseg
