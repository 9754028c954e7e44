#include "pcc/ramp.hpp"

#include <algorithm>
#include <set>

namespace pcc {

RampParams deriveRampParams(int U, int l, const Field& field) {
  if (l < 1 || l > U - 1) {
    throw ConfigError("deriveRampParams: l must be in [1, U-1]");
  }
  u64 k = static_cast<u64>(l) * binomial(U, l);
  if (k > field.pointCapacity()) {
    throw CapacityError("deriveRampParams: need " + std::to_string(k) +
                        " evaluation points but GF(2^" +
                        std::to_string(field.bitWidth()) + ") has only " +
                        std::to_string(field.pointCapacity()));
  }
  u64 r = static_cast<u64>(l) * binomial(U - 1, l - 1);
  return RampParams{static_cast<int>(r), static_cast<int>(k), static_cast<int>(k), field};
}

PointAssignment::PointAssignment(const RampParams& params, int U, int l) {
  auto subsets = subsetsOfSize(U, l);
  auto points = params.field.enumeratePoints(static_cast<u64>(params.k));
  size_t idx = 0;
  for (const auto& T : subsets) {
    for (int i = 0; i < l; ++i) {
      entries_.emplace_back(std::pair{T, i}, points[idx]);
      lookup_.emplace(std::pair{T, i}, points[idx]);
      ++idx;
    }
  }
  if (idx != points.size()) {
    throw ProtocolError("PointAssignment: share count mismatch");
  }
}

u64 PointAssignment::point(const Subset& T, int i) const {
  auto it = lookup_.find({T, i});
  if (it == lookup_.end()) {
    throw std::domain_error("PointAssignment: unknown (subset, index) pair");
  }
  return it->second;
}

FilePacketization packetize(const BitString& file, const RampParams& params) {
  if (file.bit_count <= 0) {
    throw std::invalid_argument("packetize: file must be nonempty");
  }
  int mr = params.m - params.r;
  int L = params.field.bitWidth();
  i64 unit = static_cast<i64>(mr) * L;
  i64 total = (file.bit_count + unit - 1) / unit * unit;
  FilePacketization pack;
  pack.original_bits = file.bit_count;
  pack.packet_count = mr;
  pack.elems_per_packet = static_cast<int>(total / unit);
  pack.pad_bits = static_cast<int>(total - file.bit_count);
  int E = pack.elems_per_packet;

  // Global element e holds file bits [e*L, (e+1)*L); packet j owns elements
  // [j*E, (j+1)*E).
  pack.packets.assign(static_cast<size_t>(mr), std::vector<u64>(static_cast<size_t>(E), 0));
  for (i64 b = 0; b < file.bit_count; ++b) {
    if (!file.getBit(b)) continue;
    i64 e = b / L;
    int bit = static_cast<int>(b % L);
    pack.packets[static_cast<size_t>(e / E)][static_cast<size_t>(e % E)] |= u64{1} << bit;
  }
  return pack;
}

BitString depacketize(const FilePacketization& pack, const RampParams& params) {
  int L = params.field.bitWidth();
  int E = pack.elems_per_packet;
  BitString file = BitString::zeros(pack.original_bits);
  for (i64 b = 0; b < pack.original_bits; ++b) {
    i64 e = b / L;
    int bit = static_cast<int>(b % L);
    u64 elem = pack.packets[static_cast<size_t>(e / E)][static_cast<size_t>(e % E)];
    if ((elem >> bit) & 1) file.setBit(b, true);
  }
  return file;
}

std::vector<FieldPoly> encodeFile(const FilePacketization& pack,
                                  const RampParams& params, std::mt19937_64& rng) {
  if (pack.packet_count != params.m - params.r) {
    throw std::invalid_argument("encodeFile: packetization does not match params");
  }
  std::vector<FieldPoly> polys;
  polys.reserve(static_cast<size_t>(pack.elems_per_packet));
  std::vector<u64> pinned(static_cast<size_t>(pack.packet_count));
  for (int s = 0; s < pack.elems_per_packet; ++s) {
    for (int j = 0; j < pack.packet_count; ++j) {
      pinned[static_cast<size_t>(j)] = pack.packets[static_cast<size_t>(j)][static_cast<size_t>(s)];
    }
    polys.push_back(params.field.randomPolynomial(rng, params.m - 1, pinned));
  }
  return polys;
}

std::vector<Share> makeShares(const std::vector<FieldPoly>& polys,
                              const PointAssignment& assignment,
                              const RampParams& params, int file, int epoch) {
  if (assignment.entries().size() != static_cast<size_t>(params.k)) {
    throw std::invalid_argument("makeShares: assignment does not cover all k points");
  }
  std::vector<Share> shares;
  shares.reserve(assignment.entries().size());
  for (const auto& [key, point] : assignment.entries()) {
    Share s;
    s.id = ShareId{file, key.first, key.second};
    s.epoch = epoch;
    s.values.reserve(polys.size());
    for (const auto& poly : polys) {
      s.values.push_back(params.field.evalPoly(poly, point));
    }
    shares.push_back(std::move(s));
  }
  return shares;
}

BitString reconstruct(std::span<const Share> shares,
                      const PointAssignment& assignment,
                      const RampParams& params, i64 original_bits) {
  if (shares.size() < static_cast<size_t>(params.m)) {
    throw InsufficientSharesError("reconstruct: got " + std::to_string(shares.size()) +
                                  " shares, need " + std::to_string(params.m));
  }
  std::set<ShareId> ids;
  for (const auto& s : shares) {
    if (s.epoch != shares.front().epoch) {
      throw MixedEpochError("reconstruct: shares span more than one epoch");
    }
    if (!ids.insert(s.id).second) {
      throw std::invalid_argument("reconstruct: duplicate share id");
    }
    if (s.values.size() != shares.front().values.size()) {
      throw std::invalid_argument("reconstruct: inconsistent slot counts");
    }
  }

  size_t n = shares.size();
  size_t slots = shares.front().values.size();
  std::vector<u64> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = assignment.point(shares[i].id.subset, shares[i].id.point);
  }

  FilePacketization pack;
  pack.original_bits = original_bits;
  pack.packet_count = params.m - params.r;
  pack.elems_per_packet = static_cast<int>(slots);
  pack.pad_bits = static_cast<int>(static_cast<i64>(pack.packet_count) *
                                       params.field.bitWidth() * pack.elems_per_packet -
                                   original_bits);
  pack.packets.assign(static_cast<size_t>(pack.packet_count),
                      std::vector<u64>(slots, 0));
  for (size_t s = 0; s < slots; ++s) {
    for (size_t i = 0; i < n; ++i) ys[i] = shares[i].values[s];
    FieldPoly poly = params.field.interpolate(xs, ys);
    for (size_t j = static_cast<size_t>(params.m); j < poly.coeffs.size(); ++j) {
      if (poly.coeffs[j] != 0) {
        throw ProtocolError("reconstruct: shares are not consistent with one polynomial");
      }
    }
    for (int j = 0; j < pack.packet_count; ++j) {
      pack.packets[static_cast<size_t>(j)][s] = poly.coeffs[static_cast<size_t>(params.r + j)];
    }
  }
  return depacketize(pack, params);
}

SecretCounts countConsistentSecrets(std::span<const Share> shares,
                                    const RampParams& params,
                                    const PointAssignment& assignment) {
  const Field& F = params.field;
  int L = F.bitWidth();
  int m = params.m;
  int r = params.r;

  // Deduplicate identical (id, epoch) captures; single-slot shares only.
  std::vector<Share> obs;
  {
    std::set<std::pair<ShareId, int>> seen;
    for (const auto& s : shares) {
      if (s.values.size() != 1) {
        throw std::invalid_argument("countConsistentSecrets: single-slot shares only");
      }
      if (seen.insert({s.id, s.epoch}).second) obs.push_back(s);
    }
  }

  std::vector<int> epochs;
  for (const auto& s : obs) epochs.push_back(s.epoch);
  std::sort(epochs.begin(), epochs.end());
  epochs.erase(std::unique(epochs.begin(), epochs.end()), epochs.end());
  int extra_epochs = std::max<int>(0, static_cast<int>(epochs.size()) - 1);

  // Unknowns: m base coefficients plus one degree-(r-1) delta polynomial per
  // additional observed epoch (unobserved updates fold into the deltas).
  i64 unknown_bits = static_cast<i64>(L) * (m + r * extra_epochs);
  if (unknown_bits > 24) {
    throw CapacityError("countConsistentSecrets: enumeration of 2^" +
                        std::to_string(unknown_bits) + " exceeds the 2^24 cap");
  }

  u64 q = u64{1} << L;
  size_t n_obs = obs.size();
  std::vector<u64> pts(n_obs);
  std::vector<int> epoch_index(n_obs);
  for (size_t i = 0; i < n_obs; ++i) {
    pts[i] = assignment.point(obs[i].id.subset, obs[i].id.point);
    epoch_index[i] = static_cast<int>(
        std::lower_bound(epochs.begin(), epochs.end(), obs[i].epoch) - epochs.begin());
  }

  SecretCounts out;
  out.candidate_space = 1;
  for (int j = 0; j < m - r; ++j) out.candidate_space *= q;

  int delta_coeffs = r * extra_epochs;
  std::vector<u64> base(static_cast<size_t>(m), 0);
  std::vector<u64> delta(static_cast<size_t>(delta_coeffs), 0);
  FieldPoly base_poly{std::vector<u64>(static_cast<size_t>(m))};
  FieldPoly delta_poly{std::vector<u64>(static_cast<size_t>(r))};

  std::map<std::vector<u64>, u64>& counts = out.counts;

  u64 base_total = 1;
  for (int j = 0; j < m; ++j) base_total *= q;
  u64 delta_total = 1;
  for (int j = 0; j < delta_coeffs; ++j) delta_total *= q;

  for (u64 bi = 0; bi < base_total; ++bi) {
    u64 t = bi;
    for (int j = 0; j < m; ++j) {
      base[static_cast<size_t>(j)] = t % q;
      t /= q;
    }
    base_poly.coeffs = base;
    // Base evaluations at each observation point.
    std::vector<u64> base_eval(n_obs);
    for (size_t i = 0; i < n_obs; ++i) base_eval[i] = F.evalPoly(base_poly, pts[i]);

    u64 matched = 0;
    for (u64 di = 0; di < delta_total; ++di) {
      u64 d = di;
      for (int j = 0; j < delta_coeffs; ++j) {
        delta[static_cast<size_t>(j)] = d % q;
        d /= q;
      }
      bool ok = true;
      for (size_t i = 0; i < n_obs && ok; ++i) {
        u64 v = base_eval[i];
        for (int e = 0; e < epoch_index[i]; ++e) {
          std::copy_n(delta.begin() + static_cast<size_t>(e) * r, r, delta_poly.coeffs.begin());
          v = F.add(v, F.evalPoly(delta_poly, pts[i]));
        }
        if (v != obs[i].values[0]) ok = false;
      }
      if (ok) ++matched;
    }
    if (matched != 0) {
      std::vector<u64> secret(base.begin() + r, base.end());
      counts[secret] += matched;
    }
  }

  // Materialize zero-count candidates so uniformity is over the whole space.
  {
    std::vector<u64> secret(static_cast<size_t>(m - r), 0);
    for (u64 ci = 0; ci < out.candidate_space; ++ci) {
      u64 t = ci;
      for (int j = 0; j < m - r; ++j) {
        secret[static_cast<size_t>(j)] = t % q;
        t /= q;
      }
      counts.try_emplace(secret, 0);
    }
  }

  out.min_count = ~u64{0};
  for (const auto& [sec, c] : counts) {
    if (c > 0) ++out.nonzero;
    out.min_count = std::min(out.min_count, c);
    out.max_count = std::max(out.max_count, c);
  }
  if (counts.empty()) out.min_count = 0;
  return out;
}

}  // namespace pcc
