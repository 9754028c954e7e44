#pragma once
// adversary.hpp - executable attacker models: the cross-epoch curious
// attacker, the per-user privacy audit, and the delivery eavesdropper, all
// judged by the exhaustive consistency-counting oracle.

#include "pcc/protocol.hpp"

namespace pcc {

struct CapturedShare {
  Share share;
  int capture_epoch = 0;
};

// Verbatim copies of file-cache shares; never contains key material.
struct CuriousView {
  std::vector<CapturedShare> captured;
  std::string schedule_digest;
};

enum class Verdict { FullyPrivate, PartiallyLeaked, Broken };

const char* verdictName(Verdict v);

struct AttackReport {
  std::string mode;
  std::string schedule_digest;
  u64 candidates_total = 0;
  u64 candidates_nonzero = 0;
  u64 min_count = 0;
  u64 max_count = 0;
  Verdict verdict = Verdict::FullyPrivate;
  std::string detail;

  std::string toLine() const;
};

// Copies user u's current shares (optionally restricted to one file) into
// the view, tagged with the capture epoch.
void snapshot(const UserState& user, int capture_epoch, std::optional<int> file_filter,
              CuriousView& view);

// Broken when >= m same-epoch shares of the file are present (direct
// reconstruction); otherwise judged by the counting oracle over the
// mixed-epoch union.
AttackReport attemptReconstruct(const CuriousView& view, int file,
                                const RampParams& params,
                                const PointAssignment& assignment);

// File-privacy audit for one (user, unrequested file) pair after delivery.
AttackReport userPrivacyAudit(const Simulation& sim, int user, int file);

// Structural one-time-key discipline: every delivery symbol's context is in
// the ledger, delivery context count matches the symbol count, and no final
// key value or over-sized subset ever appears in key-agreement broadcasts.
AttackReport eavesdropperAudit(const Simulation& sim);

// Pearson chi-square statistic against a uniform distribution.
double chiSquareUniform(std::span<const u64> histogram);

}  // namespace pcc
