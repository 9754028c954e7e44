#pragma once
// groupkey.hpp - DH-based master secret keys for every size-(l+1) user
// subset, non-broadcast size-l renewal keys, HKDF session-key derivation,
// and the global one-time-use ledger.

#include <set>

#include "pcc/field.hpp"
#include "pcc/netsim.hpp"

namespace pcc {

// Safe-prime group: q = 2p+1, g generates the order-p subgroup mod q.
struct GroupParams {
  u64 q = 0;
  u64 p = 0;
  u64 g = 0;

  void validate() const;
  int byteWidth() const;

  static GroupParams toy();         // q=23, p=11, g=2 (unit tests)
  static GroupParams simulation();  // 61-bit safe prime
};

u64 mulMod(u64 a, u64 b, u64 mod);
u64 powMod(u64 base, u64 exp, u64 mod);
bool isPrime64(u64 n);

struct MasterSecretKey {
  Subset subset;  // size l+1 (MSK) or l (renewal key)
  u64 element = 0;
  int epoch_established = 0;
  // Round-0 public values of the subset's members, the HKDF salt.
  std::vector<u8> salt;
  bool operator==(const MasterSecretKey&) const = default;
};

// Member at index (sum of member ids) mod |T|.
int designatedUser(const Subset& T);

// ceil(C(U,l')/U), the per-user per-round work estimate.
u64 estimatePerUserComputations(int U, int l_prime);

// Fixed-width big-endian encoding of the group element, ceil(bits(q)/8) bytes.
std::vector<u8> mskToSeed(const MasterSecretKey& msk, const GroupParams& group);

enum class KeyPurpose { RenewalX, RenewalY, Delivery };

struct DeriveContext {
  KeyPurpose purpose = KeyPurpose::Delivery;
  Subset subset;   // the key's subset
  int file = -1;   // -1 when not file-bound
  int epoch = -1;
  int sender = -1;
  int index = -1;  // point index (renewal) or key index (delivery)

  std::string canonical() const;
  auto operator<=>(const DeriveContext&) const = default;
};

struct DerivedKey {
  DeriveContext context;
  std::vector<u64> values;  // field elements sized to the payload
};

// Records every context whose pad has been used for masking; a second use
// is a hard failure.
class KeyLedger {
 public:
  void registerUse(const DeriveContext& ctx);
  bool used(const DeriveContext& ctx) const;
  size_t size() const { return used_.size(); }
  size_t countPurpose(KeyPurpose p) const;
  const std::set<std::string>& entries() const { return used_; }

 private:
  std::set<std::string> used_;
};

// HKDF-based schedule. In ideal-pad mode (test hook) HKDF is replaced by a
// fresh uniform pad per context, memoized so both endpoints see the same pad.
class KeySchedule {
 public:
  KeySchedule(const Field& field, const GroupParams& group);
  void enableIdealPads(u64 seed);

  // length_bits must be a multiple of the field width. Pass the ledger when
  // masking a fresh payload; pass nullptr to recompute on the receiving side.
  DerivedKey derive(const MasterSecretKey& msk, const DeriveContext& ctx,
                    int length_bits, KeyLedger* ledger);

 private:
  Field field_;
  GroupParams group_;
  bool ideal_ = false;
  std::mt19937_64 ideal_rng_;
  std::map<std::string, std::vector<u64>> ideal_cache_;
};

struct UserKeys {
  std::vector<MasterSecretKey> msks;          // size-(l+1) subsets containing u
  std::vector<MasterSecretKey> renewal_keys;  // size-l subsets containing u (l >= 2)
};

// Algorithm-1-shaped agreement over the broadcast network. Round 0 publishes
// g^x_u; rounds 1..l-1 publish size-(l'+1) aggregates, each computed once by
// the subset's designated user; every member of a size-(l+1) subset then
// computes the MSK locally. Size-l renewal keys run the same chain over the
// fresh exponents y, stopping the broadcasts at size l-1 so the final
// aggregate never leaves the members.
std::vector<UserKeys> runKeyAgreement(const GroupParams& group,
                                      std::span<const u64> x,
                                      std::span<const u64> y, int l,
                                      Network& net);

}  // namespace pcc
