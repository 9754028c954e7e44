#include "pcc/netsim.hpp"

#include <algorithm>

#include "pcc/hkdf.hpp"

namespace pcc {

const char* phaseName(Phase p) {
  switch (p) {
    case Phase::KeyAgreement: return "key-agreement";
    case Phase::RenewalX: return "renewal-x";
    case Phase::RenewalY: return "renewal-y";
    case Phase::Delivery: return "delivery";
  }
  return "?";
}

Tap& Network::attachTap(std::set<Phase> phases) {
  if (started_) {
    throw ProtocolError("attachTap: taps must be attached before the simulation starts");
  }
  taps_.push_back(std::make_unique<Tap>());
  taps_.back()->phases = std::move(phases);
  return *taps_.back();
}

void Network::beginPhase(Phase p) {
  commitRound();
  started_ = true;
  phase_ = p;
  ++round_;
}

void Network::broadcast(BroadcastMessage msg) {
  if (!phase_.has_value() || msg.phase != *phase_) {
    throw ProtocolError("broadcast: message phase does not match the current phase");
  }
  msg.round = round_;
  pending_.push_back(std::move(msg));
}

void Network::commitRound() {
  if (pending_.empty()) return;
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const BroadcastMessage& a, const BroadcastMessage& b) {
                     return a.sender < b.sender;
                   });
  for (auto& msg : pending_) {
    phase_bits_[msg.phase] += msg.payload_bits;
    for (auto& tap : taps_) {
      if (tap->phases.contains(msg.phase)) tap->seen.push_back(msg);
    }
    transcript_.push_back(std::move(msg));
  }
  pending_.clear();
}

i64 Network::phaseBits(Phase p) const {
  auto it = phase_bits_.find(p);
  return it == phase_bits_.end() ? 0 : it->second;
}

i64 Network::totalBits() const {
  i64 total = 0;
  for (const auto& [p, bits] : phase_bits_) total += bits;
  return total;
}

std::string Network::exportTranscript() const {
  std::string out;
  for (const auto& msg : transcript_) {
    out += "phase=";
    out += phaseName(msg.phase);
    out += " round=" + std::to_string(msg.round);
    out += " sender=" + std::to_string(msg.sender);
    out += " file=" + (msg.meta.file < 0 ? std::string("-") : std::to_string(msg.meta.file));
    out += " subset=" + (msg.meta.subset.empty() ? std::string("-")
                                                 : formatSubset(msg.meta.subset, '.'));
    out += " point=" + (msg.meta.point < 0 ? std::string("-") : std::to_string(msg.meta.point));
    out += " epoch=" + (msg.meta.epoch < 0 ? std::string("-") : std::to_string(msg.meta.epoch));
    out += " bits=" + std::to_string(msg.payload_bits);
    out += " hash=" + sha256Hex(msg.payload).substr(0, 16);
    out += '\n';
  }
  return out;
}

std::string Network::transcriptHash() const {
  std::string text = exportTranscript();
  return sha256Hex({reinterpret_cast<const u8*>(text.data()), text.size()});
}

}  // namespace pcc
