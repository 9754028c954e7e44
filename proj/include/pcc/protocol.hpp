#pragma once
// protocol.hpp - the full scheme: prefetching, key establishment, proactive
// renewal epochs, coded delivery and decoding, with exact cache and load
// accounting.

#include "pcc/groupkey.hpp"
#include "pcc/ramp.hpp"
#include "pcc/report.hpp"

namespace pcc {

struct SystemConfig {
  int U = 0;
  int N = 0;
  int l = 0;
  int L = 0;
  int T = 0;
  std::vector<std::vector<int>> schedule;       // A_t per epoch, size T
  std::optional<std::vector<int>> demands;      // nullopt = worst-case
  u64 seed = 0;
  GroupParams group = GroupParams::simulation();

  void validate() const;
};

// Flat key-value scenario text: keys U, N, l, L, T, schedule, demands, seed.
// Unknown keys are rejected.
SystemConfig parseConfig(const std::string& text);
SystemConfig loadConfigFile(const std::string& path);

struct SimOptions {
  bool ideal_pads = false;          // fresh uniform pad per context (test hook)
  u64 ideal_seed = 0;
  bool force_zero_renewal = false;  // h == 0 (test hook)
  bool inject_pad_reuse = false;    // drop sender binding from delivery contexts
  bool inject_bad_point_index = false;  // transmit point index 0 everywhere
};

struct UserState {
  int id = -1;
  std::map<ShareId, Share> file_cache;        // Z0
  std::vector<MasterSecretKey> msks;          // Z1, size-(l+1) subsets
  std::vector<MasterSecretKey> renewal_keys;  // Z1, size-l subsets (l >= 2)
  u64 exp_x = 0;  // private; never serialized into any message
  u64 exp_y = 0;

  const MasterSecretKey& mskFor(const Subset& L) const;
  const MasterSecretKey& renewalKeyFor(const Subset& T) const;
};

class Simulation {
 public:
  explicit Simulation(SystemConfig cfg, SimOptions opts = {});

  void prefetch();
  void establishKeys();
  void renewalEpoch(int t);  // t = epochsCompleted()+1, uses schedule[t-1]
  void delivery();
  std::vector<BitString> decodeAll();

  // prefetch -> keys -> all T renewals -> delivery -> decode + verify.
  void runAll();

  Report buildReport() const;

  const SystemConfig& config() const { return cfg_; }
  const Field& field() const { return ramp_.field; }
  const RampParams& rampParams() const { return ramp_; }
  const PointAssignment& assignment() const { return assignment_; }
  const std::vector<UserState>& users() const { return users_; }
  const std::vector<BitString>& library() const { return library_; }
  const KeyLedger& ledger() const { return ledger_; }
  Network& net() { return net_; }
  const Network& net() const { return net_; }
  KeySchedule& keySchedule() { return keysched_; }
  std::vector<int> demandVector() const;
  int fileEpoch(int n) const { return file_epochs_.at(static_cast<size_t>(n)); }
  int epochsCompleted() const { return epochs_done_; }
  i64 fileBits() const { return file_bits_; }
  bool decodeChecked() const { return decode_checked_; }
  bool decodeOk() const { return decode_ok_; }

 private:
  SystemConfig cfg_;
  SimOptions opts_;
  RampParams ramp_;
  PointAssignment assignment_;
  i64 file_bits_;  // B
  Network net_;
  KeySchedule keysched_;
  KeyLedger ledger_;
  std::vector<UserState> users_;
  std::vector<BitString> library_;
  std::vector<int> file_epochs_;
  std::vector<std::mt19937_64> renew_rngs_;  // one stream per user
  int epochs_done_ = 0;
  bool prefetched_ = false;
  bool keys_done_ = false;
  bool delivered_ = false;
  bool decode_checked_ = false;
  bool decode_ok_ = false;
};

}  // namespace pcc
