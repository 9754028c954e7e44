#pragma once
// ramp.hpp - (r,m,k) ramp secret sharing of files over GF(2^L):
// packetization, share generation, reconstruction, and the exhaustive
// consistency-counting oracle behind the privacy verdicts.

#include <compare>
#include <map>

#include "pcc/field.hpp"

namespace pcc {

struct RampParams {
  int r;  // privacy threshold
  int m;  // reconstruction threshold
  int k;  // share count
  Field field;
};

// r = l*C(U-1,l-1), m = k = l*C(U,l).
RampParams deriveRampParams(int U, int l, const Field& field);

struct ShareId {
  int file;
  Subset subset;  // strictly increasing user ids, size l
  int point;      // i in [l]
  auto operator<=>(const ShareId&) const = default;
};

// One evaluation point's worth of data: one value per element-slot, so a
// share always carries B/(m-r) bits regardless of file size.
struct Share {
  ShareId id;
  int epoch = 0;
  std::vector<u64> values;
  bool operator==(const Share&) const = default;
};

// Bijection (T,i) -> nonzero field element, identical across all parties:
// subsets in lexicographic order, point index ascending, mapped onto the
// first k nonzero elements.
class PointAssignment {
 public:
  PointAssignment() = default;
  PointAssignment(const RampParams& params, int U, int l);

  u64 point(const Subset& T, int i) const;
  const std::vector<std::pair<std::pair<Subset, int>, u64>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::pair<Subset, int>, u64>> entries_;
  std::map<std::pair<Subset, int>, u64> lookup_;
};

inline PointAssignment assignPoints(const RampParams& params, int U, int l) {
  return PointAssignment(params, U, l);
}

struct FilePacketization {
  i64 original_bits = 0;
  int packet_count = 0;       // m - r
  int elems_per_packet = 0;   // vectorization width E
  int pad_bits = 0;
  std::vector<std::vector<u64>> packets;  // packet_count x elems_per_packet
};

// Zero-pad to the smallest multiple of (m-r)*L bits and slice into m-r
// packets of equal element count.
FilePacketization packetize(const BitString& file, const RampParams& params);
BitString depacketize(const FilePacketization& pack, const RampParams& params);

// One polynomial per element-slot: coefficients 0..r-1 uniform, coefficient
// r+j pinned to packet j's slot element, degree bound m-1.
std::vector<FieldPoly> encodeFile(const FilePacketization& pack,
                                  const RampParams& params, std::mt19937_64& rng);

std::vector<Share> makeShares(const std::vector<FieldPoly>& polys,
                              const PointAssignment& assignment,
                              const RampParams& params, int file, int epoch);

// Interpolates >= m same-epoch shares and strips padding. original_bits is
// the pre-padding file length.
BitString reconstruct(std::span<const Share> shares,
                      const PointAssignment& assignment,
                      const RampParams& params, i64 original_bits);

// Exhaustive counting oracle for the three ramp properties. For every
// candidate secret vector, the number of coefficient assignments consistent
// with the given shares. Mixed-epoch shares are modeled with one unknown
// degree-(r-1) delta polynomial per additional observed epoch. Single-slot
// shares only; refuses when the enumeration exceeds 2^24.
struct SecretCounts {
  std::map<std::vector<u64>, u64> counts;  // every candidate, zero included
  u64 candidate_space = 0;                 // |F|^(m-r)
  u64 nonzero = 0;
  u64 min_count = 0;  // over all candidates
  u64 max_count = 0;
  bool uniform() const { return nonzero == candidate_space && min_count == max_count; }
};

SecretCounts countConsistentSecrets(std::span<const Share> shares,
                                    const RampParams& params,
                                    const PointAssignment& assignment);

}  // namespace pcc
