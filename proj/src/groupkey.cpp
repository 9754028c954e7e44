#include "pcc/groupkey.hpp"

#include <algorithm>

#include "pcc/hkdf.hpp"

namespace pcc {

u64 mulMod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod);
}

u64 powMod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = mulMod(result, base, mod);
    base = mulMod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool isPrime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void GroupParams::validate() const {
  if (!isPrime64(q) || !isPrime64(p)) {
    throw ConfigError("GroupParams: q and p must be prime");
  }
  if (q != 2 * p + 1) throw ConfigError("GroupParams: q must equal 2p+1");
  if (g <= 1 || g >= q) throw ConfigError("GroupParams: generator out of range");
  if (powMod(g, p, q) != 1) {
    throw ConfigError("GroupParams: generator does not have order p");
  }
}

int GroupParams::byteWidth() const {
  int bits = 64 - std::countl_zero(q);
  return (bits + 7) / 8;
}

GroupParams GroupParams::toy() { return GroupParams{23, 11, 2}; }

GroupParams GroupParams::simulation() {
  return GroupParams{2305843009213691579ull, 1152921504606845789ull, 4};
}

int designatedUser(const Subset& T) {
  if (T.empty()) throw std::invalid_argument("designatedUser: empty subset");
  i64 sum = 0;
  for (int u : T) sum += u;
  return T[static_cast<size_t>(sum % static_cast<i64>(T.size()))];
}

u64 estimatePerUserComputations(int U, int l_prime) {
  return (binomial(U, l_prime) + static_cast<u64>(U) - 1) / static_cast<u64>(U);
}

namespace {

std::vector<u8> encodeElement(u64 element, const GroupParams& group) {
  int width = group.byteWidth();
  std::vector<u8> out(static_cast<size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] = static_cast<u8>(element & 0xff);
    element >>= 8;
  }
  return out;
}

const char* purposeName(KeyPurpose p) {
  switch (p) {
    case KeyPurpose::RenewalX: return "renewal-x";
    case KeyPurpose::RenewalY: return "renewal-y";
    case KeyPurpose::Delivery: return "delivery";
  }
  return "?";
}

}  // namespace

std::vector<u8> mskToSeed(const MasterSecretKey& msk, const GroupParams& group) {
  return encodeElement(msk.element, group);
}

std::string DeriveContext::canonical() const {
  std::string s = purposeName(purpose);
  s += ";subset=" + formatSubset(subset);
  s += ";file=" + std::to_string(file);
  s += ";epoch=" + std::to_string(epoch);
  s += ";sender=" + std::to_string(sender);
  s += ";index=" + std::to_string(index);
  return s;
}

void KeyLedger::registerUse(const DeriveContext& ctx) {
  if (!used_.insert(ctx.canonical()).second) {
    throw LedgerViolation("one-time key context reused: " + ctx.canonical());
  }
}

bool KeyLedger::used(const DeriveContext& ctx) const {
  return used_.contains(ctx.canonical());
}

size_t KeyLedger::countPurpose(KeyPurpose p) const {
  std::string prefix = purposeName(p);
  prefix += ';';
  size_t n = 0;
  for (const auto& e : used_) {
    if (e.starts_with(prefix)) ++n;
  }
  return n;
}

KeySchedule::KeySchedule(const Field& field, const GroupParams& group)
    : field_(field), group_(group) {}

void KeySchedule::enableIdealPads(u64 seed) {
  ideal_ = true;
  ideal_rng_.seed(seed);
  ideal_cache_.clear();
}

DerivedKey KeySchedule::derive(const MasterSecretKey& msk, const DeriveContext& ctx,
                               int length_bits, KeyLedger* ledger) {
  int L = field_.bitWidth();
  if (length_bits <= 0 || length_bits % L != 0) {
    throw std::invalid_argument("KeySchedule::derive: length must be a multiple of L");
  }
  if (ledger != nullptr) ledger->registerUse(ctx);

  size_t count = static_cast<size_t>(length_bits / L);
  DerivedKey key;
  key.context = ctx;
  if (ideal_) {
    auto [it, fresh] = ideal_cache_.try_emplace(ctx.canonical());
    if (fresh) {
      it->second.resize(count);
      for (auto& v : it->second) v = field_.randomElement(ideal_rng_);
    }
    key.values = it->second;
    return key;
  }

  auto ikm = mskToSeed(msk, group_);
  std::string info = ctx.canonical();
  auto okm = hkdf(msk.salt, ikm,
                  {reinterpret_cast<const u8*>(info.data()), info.size()},
                  (static_cast<size_t>(length_bits) + 7) / 8);
  key.values.assign(count, 0);
  for (int b = 0; b < length_bits; ++b) {
    if ((okm[static_cast<size_t>(b) >> 3] >> (b & 7)) & 1) {
      key.values[static_cast<size_t>(b / L)] |= u64{1} << (b % L);
    }
  }
  return key;
}

namespace {

// One aggregation chain: publishes aggregate sizes 2..max_broadcast via the
// designated member, each built from the previous round's public values.
// Returns all public aggregates keyed by subset.
std::map<Subset, u64> runChain(const GroupParams& group, std::span<const u64> exps,
                               int max_broadcast, Network& net) {
  int U = static_cast<int>(exps.size());
  std::map<Subset, u64> pub;

  net.beginPhase(Phase::KeyAgreement);
  for (int u = 0; u < U; ++u) {
    u64 val = powMod(group.g, exps[static_cast<size_t>(u)], group.q);
    pub[{u}] = val;
    BroadcastMessage msg;
    msg.sender = u;
    msg.phase = Phase::KeyAgreement;
    msg.payload = encodeElement(val, group);
    msg.payload_bits = static_cast<i64>(msg.payload.size()) * 8;
    msg.meta.subset = {u};
    net.broadcast(msg);
  }
  net.commitRound();

  for (int size = 2; size <= max_broadcast; ++size) {
    net.beginPhase(Phase::KeyAgreement);
    for (const auto& S : subsetsOfSize(U, size)) {
      int d = designatedUser(S);
      Subset rest;
      for (int v : S) {
        if (v != d) rest.push_back(v);
      }
      u64 val = powMod(pub.at(rest), exps[static_cast<size_t>(d)], group.q);
      pub[S] = val;
      BroadcastMessage msg;
      msg.sender = d;
      msg.phase = Phase::KeyAgreement;
      msg.payload = encodeElement(val, group);
      msg.payload_bits = static_cast<i64>(msg.payload.size()) * 8;
      msg.meta.subset = S;
      net.broadcast(msg);
    }
    net.commitRound();
  }
  return pub;
}

std::vector<u8> chainSalt(const Subset& subset, const std::map<Subset, u64>& pub,
                          const GroupParams& group) {
  std::vector<u8> salt;
  for (int u : subset) {
    auto enc = encodeElement(pub.at({u}), group);
    salt.insert(salt.end(), enc.begin(), enc.end());
  }
  return salt;
}

// Final non-broadcast step: each member computes pub(S \ {u})^exp_u.
MasterSecretKey finishKey(const Subset& S, int u, std::span<const u64> exps,
                          const std::map<Subset, u64>& pub, const GroupParams& group) {
  Subset rest;
  for (int v : S) {
    if (v != u) rest.push_back(v);
  }
  MasterSecretKey key;
  key.subset = S;
  key.element = powMod(pub.at(rest), exps[static_cast<size_t>(u)], group.q);
  key.salt = chainSalt(S, pub, group);
  return key;
}

}  // namespace

std::vector<UserKeys> runKeyAgreement(const GroupParams& group,
                                      std::span<const u64> x,
                                      std::span<const u64> y, int l,
                                      Network& net) {
  group.validate();
  int U = static_cast<int>(x.size());
  if (l < 1 || l > U - 1) throw ConfigError("runKeyAgreement: l must be in [1, U-1]");
  if (l >= 2 && y.size() != x.size()) {
    throw ConfigError("runKeyAgreement: renewal-chain exponents missing");
  }

  std::vector<UserKeys> out(static_cast<size_t>(U));

  // MSK chain over x: broadcast aggregates up to size l, finish at size l+1.
  auto pub_x = runChain(group, x, l, net);
  for (const auto& L : subsetsOfSize(U, l + 1)) {
    for (int u : L) {
      out[static_cast<size_t>(u)].msks.push_back(finishKey(L, u, x, pub_x, group));
    }
  }

  // Renewal-key chain over y: broadcast up to size l-1, finish at size l.
  if (l >= 2) {
    auto pub_y = runChain(group, y, l - 1, net);
    for (const auto& T : subsetsOfSize(U, l)) {
      for (int u : T) {
        out[static_cast<size_t>(u)].renewal_keys.push_back(
            finishKey(T, u, y, pub_y, group));
      }
    }
  }
  return out;
}

}  // namespace pcc
