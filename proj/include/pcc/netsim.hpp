#pragma once
// netsim.hpp - deterministic synchronous broadcast network with full
// transcript capture, per-phase bit accounting, and adversary taps.

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "pcc/common.hpp"

namespace pcc {

enum class Phase { KeyAgreement, RenewalX, RenewalY, Delivery };

const char* phaseName(Phase p);

struct MessageMeta {
  int file = -1;
  Subset subset;
  int point = -1;
  int epoch = -1;
  bool operator==(const MessageMeta&) const = default;
};

struct BroadcastMessage {
  int sender = -1;
  Phase phase = Phase::KeyAgreement;
  int round = -1;  // assigned by the network at broadcast time
  std::vector<u8> payload;
  i64 payload_bits = 0;  // 8*|payload| minus declared padding
  MessageMeta meta;
};

// Read-only observer attached before the simulation starts.
struct Tap {
  std::set<Phase> phases;
  std::vector<BroadcastMessage> seen;
};

// Every broadcast reaches every user. Messages submitted within a round are
// committed in (round, sender) order at the barrier; rounds are numbered
// globally in the order phases begin.
class Network {
 public:
  Tap& attachTap(std::set<Phase> phases);

  void beginPhase(Phase p);  // commits any pending round, then opens a new one
  void broadcast(BroadcastMessage msg);
  void commitRound();

  const std::vector<BroadcastMessage>& transcript() const { return transcript_; }
  i64 phaseBits(Phase p) const;
  i64 totalBits() const;
  std::optional<Phase> currentPhase() const { return phase_; }
  int currentRound() const { return round_; }

  // Line-delimited export, one message per line, fields in stable order:
  // phase round sender file subset point epoch bits payload-hash.
  std::string exportTranscript() const;
  std::string transcriptHash() const;

 private:
  std::vector<BroadcastMessage> transcript_;
  std::vector<BroadcastMessage> pending_;
  std::optional<Phase> phase_;
  int round_ = -1;
  bool started_ = false;
  std::map<Phase, i64> phase_bits_;
  std::vector<std::unique_ptr<Tap>> taps_;
};

}  // namespace pcc
