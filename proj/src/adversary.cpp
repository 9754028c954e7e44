#include "pcc/adversary.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcc {

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::FullyPrivate: return "fully-private";
    case Verdict::PartiallyLeaked: return "partially-leaked";
    case Verdict::Broken: return "broken";
  }
  return "?";
}

std::string AttackReport::toLine() const {
  std::string s = "mode=" + mode;
  s += " schedule=" + (schedule_digest.empty() ? std::string("-") : schedule_digest);
  s += " candidates=" + std::to_string(candidates_total);
  s += " nonzero=" + std::to_string(candidates_nonzero);
  s += " min=" + std::to_string(min_count);
  s += " max=" + std::to_string(max_count);
  s += " verdict=";
  s += verdictName(verdict);
  if (!detail.empty()) s += " detail=" + detail;
  return s;
}

void snapshot(const UserState& user, int capture_epoch, std::optional<int> file_filter,
              CuriousView& view) {
  for (const auto& [id, share] : user.file_cache) {
    if (file_filter && id.file != *file_filter) continue;
    view.captured.push_back(CapturedShare{share, capture_epoch});
  }
  if (!view.schedule_digest.empty()) view.schedule_digest += '+';
  view.schedule_digest += "u" + std::to_string(user.id) + "@e" + std::to_string(capture_epoch);
}

namespace {

AttackReport verdictFromCounts(const SecretCounts& counts, std::string mode,
                               std::string digest) {
  AttackReport rep;
  rep.mode = std::move(mode);
  rep.schedule_digest = std::move(digest);
  rep.candidates_total = counts.candidate_space;
  rep.candidates_nonzero = counts.nonzero;
  rep.min_count = counts.min_count;
  rep.max_count = counts.max_count;
  if (counts.nonzero == 1) {
    rep.verdict = Verdict::Broken;
  } else if (counts.uniform()) {
    rep.verdict = Verdict::FullyPrivate;
  } else {
    rep.verdict = Verdict::PartiallyLeaked;
  }
  return rep;
}

}  // namespace

AttackReport attemptReconstruct(const CuriousView& view, int file,
                                const RampParams& params,
                                const PointAssignment& assignment) {
  // Distinct (id, epoch) captures of the target file.
  std::vector<Share> shares;
  std::set<std::pair<ShareId, int>> seen;
  std::map<int, std::set<ShareId>> per_epoch;
  for (const auto& cap : view.captured) {
    if (cap.share.id.file != file) continue;
    if (seen.insert({cap.share.id, cap.share.epoch}).second) {
      shares.push_back(cap.share);
      per_epoch[cap.share.epoch].insert(cap.share.id);
    }
  }

  for (const auto& [epoch, ids] : per_epoch) {
    if (ids.size() >= static_cast<size_t>(params.m)) {
      AttackReport rep;
      rep.mode = "curious";
      rep.schedule_digest = view.schedule_digest;
      rep.candidates_total = 0;
      rep.candidates_nonzero = 1;
      rep.min_count = rep.max_count = 1;
      rep.verdict = Verdict::Broken;
      rep.detail = "epoch-" + std::to_string(epoch) + "-has-" +
                   std::to_string(ids.size()) + "-shares";
      return rep;
    }
  }

  auto counts = countConsistentSecrets(shares, params, assignment);
  auto rep = verdictFromCounts(counts, "curious", view.schedule_digest);

  size_t largest = 0;
  for (const auto& [epoch, ids] : per_epoch) largest = std::max(largest, ids.size());
  if (largest > 0 && largest < shares.size()) {
    std::vector<Share> same;
    for (const auto& [epoch, ids] : per_epoch) {
      if (ids.size() != largest) continue;
      for (const auto& s : shares) {
        if (s.epoch == epoch) same.push_back(s);
      }
      break;
    }
    auto sub = countConsistentSecrets(same, params, assignment);
    rep.detail += (rep.detail.empty() ? "" : ";");
    rep.detail += "largest-same-epoch-nonzero=" + std::to_string(sub.nonzero);
  }
  return rep;
}

AttackReport userPrivacyAudit(const Simulation& sim, int user, int file) {
  auto d = sim.demandVector();
  if (d[static_cast<size_t>(user)] == file) {
    throw std::invalid_argument("userPrivacyAudit: file was requested by the user");
  }
  const auto& st = sim.users()[static_cast<size_t>(user)];

  // Delivery symbols referencing the file must be either undecryptable by
  // this user or cancel against shares it already caches.
  std::string structural;
  for (const auto& msg : sim.net().transcript()) {
    if (msg.phase != Phase::Delivery) continue;
    const Subset& Lset = msg.meta.subset;
    for (int k : Lset) {
      if (k == msg.sender || d[static_cast<size_t>(k)] != file) continue;
      if (!contains(Lset, user)) continue;  // key underivable by this user
      if (k == user) continue;              // not possible: file != own demand
      // user is in Lset \ {k}, so the file-n component is one of its cached
      // shares and cancels.
      Subset T;
      for (int w : Lset) {
        if (w != k) T.push_back(w);
      }
      if (!contains(T, user)) {
        structural = "uncached-component-in-subset-" + formatSubset(Lset);
      }
    }
  }

  std::vector<Share> visible;
  for (const auto& [id, share] : st.file_cache) {
    if (id.file == file) visible.push_back(share);
  }

  AttackReport rep;
  if (visible.size() > static_cast<size_t>(sim.rampParams().r)) {
    rep.mode = "user-privacy";
    rep.verdict = Verdict::Broken;
    rep.detail = "cache-holds-" + std::to_string(visible.size()) + "-shares";
    return rep;
  }
  auto counts = countConsistentSecrets(visible, sim.rampParams(), sim.assignment());
  rep = verdictFromCounts(counts, "user-privacy",
                          "u" + std::to_string(user) + ":n" + std::to_string(file));
  if (!structural.empty()) {
    rep.verdict = Verdict::Broken;
    rep.detail = structural;
  }
  return rep;
}

AttackReport eavesdropperAudit(const Simulation& sim) {
  AttackReport rep;
  rep.mode = "eavesdropper";
  rep.verdict = Verdict::FullyPrivate;

  const auto& cfg = sim.config();
  size_t delivery_symbols = 0;
  for (const auto& msg : sim.net().transcript()) {
    if (msg.phase == Phase::Delivery) {
      ++delivery_symbols;
      DeriveContext ctx{KeyPurpose::Delivery, msg.meta.subset, -1, sim.epochsCompleted(),
                        msg.sender, cfg.l + 1 + rankIn(msg.meta.subset, msg.sender)};
      if (!sim.ledger().used(ctx)) {
        rep.verdict = Verdict::Broken;
        rep.detail = "delivery-symbol-without-ledger-entry";
        return rep;
      }
    }
  }
  size_t delivery_contexts = sim.ledger().countPurpose(KeyPurpose::Delivery);
  if (delivery_contexts != delivery_symbols) {
    rep.verdict = Verdict::Broken;
    rep.detail = "ledger-count-" + std::to_string(delivery_contexts) + "-symbols-" +
                 std::to_string(delivery_symbols);
    return rep;
  }

  // Key agreement never broadcasts a finished key: subsets stay below the
  // key sizes, and no payload equals a final key's encoding.
  std::vector<std::vector<u8>> secrets;
  for (const auto& st : sim.users()) {
    for (const auto& k : st.msks) secrets.push_back(mskToSeed(k, cfg.group));
    for (const auto& k : st.renewal_keys) secrets.push_back(mskToSeed(k, cfg.group));
  }
  for (const auto& msg : sim.net().transcript()) {
    if (msg.phase != Phase::KeyAgreement) continue;
    if (static_cast<int>(msg.meta.subset.size()) > cfg.l) {
      rep.verdict = Verdict::Broken;
      rep.detail = "key-agreement-broadcast-for-size-" +
                   std::to_string(msg.meta.subset.size()) + "-subset";
      return rep;
    }
    for (const auto& secret : secrets) {
      if (msg.payload == secret) {
        rep.verdict = Verdict::Broken;
        rep.detail = "final-key-appears-in-transcript";
        return rep;
      }
    }
  }

  rep.detail = "symbols=" + std::to_string(delivery_symbols);
  return rep;
}

double chiSquareUniform(std::span<const u64> histogram) {
  u64 total = 0;
  for (u64 c : histogram) total += c;
  if (histogram.empty() || total == 0) return 0.0;
  double expected = static_cast<double>(total) / static_cast<double>(histogram.size());
  double stat = 0;
  for (u64 c : histogram) {
    double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

}  // namespace pcc
