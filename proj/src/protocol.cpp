#include "pcc/protocol.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pcc {

namespace {

constexpr u64 kLibraryStream = 1;
constexpr u64 kEncodeStream = 2;
constexpr u64 kExponentStream = 3;
constexpr u64 kRenewalStream = 4;

u64 uniformBelow(std::mt19937_64& rng, u64 n) {
  u64 threshold = (~u64{0} - n + 1) % n;  // 2^64 mod n
  u64 v;
  do {
    v = rng();
  } while (v < threshold);
  return v % n;
}

std::vector<u8> packElements(std::span<const u64> elems, int L) {
  i64 bits = static_cast<i64>(elems.size()) * L;
  std::vector<u8> bytes(static_cast<size_t>((bits + 7) / 8), 0);
  for (size_t e = 0; e < elems.size(); ++e) {
    for (int b = 0; b < L; ++b) {
      if ((elems[e] >> b) & 1) {
        i64 pos = static_cast<i64>(e) * L + b;
        bytes[static_cast<size_t>(pos >> 3)] |= static_cast<u8>(1u << (pos & 7));
      }
    }
  }
  return bytes;
}

std::vector<u64> unpackElements(std::span<const u8> bytes, int L, size_t count) {
  std::vector<u64> elems(count, 0);
  for (size_t e = 0; e < count; ++e) {
    for (int b = 0; b < L; ++b) {
      i64 pos = static_cast<i64>(e) * L + b;
      if ((bytes[static_cast<size_t>(pos >> 3)] >> (pos & 7)) & 1) {
        elems[e] |= u64{1} << b;
      }
    }
  }
  return elems;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<int> parseIntList(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("empty entry in integer list");
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

void SystemConfig::validate() const {
  if (U < 2) throw ConfigError("config: U must be at least 2");
  if (N < 1) throw ConfigError("config: N must be at least 1");
  if (l < 1 || l > U - 1) throw ConfigError("config: l must be in [1, U-1]");
  if (L < 1 || L > 64) throw ConfigError("config: L must be in [1, 64]");
  Field field = Field::withDefaultPoly(L);
  try {
    deriveRampParams(U, l, field);
  } catch (const CapacityError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (T < 0) throw ConfigError("config: T must be nonnegative");
  if (static_cast<int>(schedule.size()) != T) {
    throw ConfigError("config: schedule must list exactly T update sets");
  }
  for (const auto& A : schedule) {
    for (int n : A) {
      if (n < 0 || n >= N) throw ConfigError("config: schedule references unknown file");
    }
    if (!std::is_sorted(A.begin(), A.end()) ||
        std::adjacent_find(A.begin(), A.end()) != A.end()) {
      throw ConfigError("config: schedule sets must be sorted and duplicate-free");
    }
  }
  if (demands) {
    if (static_cast<int>(demands->size()) != U) {
      throw ConfigError("config: demands must list one file per user");
    }
    for (int d : *demands) {
      if (d < 0 || d >= N) throw ConfigError("config: demand references unknown file");
    }
  } else if (N < U) {
    throw ConfigError("config: worst-case demands need N >= U");
  }
  group.validate();
}

SystemConfig parseConfig(const std::string& text) {
  SystemConfig cfg;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config: expected key = value: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("config: duplicate key " + key);

    if (key == "U") cfg.U = std::stoi(value);
    else if (key == "N") cfg.N = std::stoi(value);
    else if (key == "l") cfg.l = std::stoi(value);
    else if (key == "L") cfg.L = std::stoi(value);
    else if (key == "T") cfg.T = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "demands") {
      if (value == "worst-case") cfg.demands.reset();
      else cfg.demands = parseIntList(value);
    } else if (key == "schedule") {
      cfg.schedule.clear();
      size_t pos = 0;
      while (pos < value.size()) {
        size_t open = value.find('{', pos);
        if (open == std::string::npos) {
          if (!trim(value.substr(pos)).empty() && trim(value.substr(pos)) != ",") {
            throw ConfigError("config: malformed schedule: " + value);
          }
          break;
        }
        size_t close = value.find('}', open);
        if (close == std::string::npos) throw ConfigError("config: unterminated set in schedule");
        std::string inner = trim(value.substr(open + 1, close - open - 1));
        std::vector<int> A = inner.empty() ? std::vector<int>{} : parseIntList(inner);
        std::sort(A.begin(), A.end());
        cfg.schedule.push_back(std::move(A));
        pos = close + 1;
      }
    } else {
      throw ConfigError("config: unknown key " + key);
    }
  }
  for (const char* required : {"U", "N", "l", "L"}) {
    if (!seen.contains(required)) {
      throw ConfigError(std::string("config: missing key ") + required);
    }
  }
  cfg.validate();
  return cfg;
}

SystemConfig loadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parseConfig(ss.str());
}

const MasterSecretKey& UserState::mskFor(const Subset& L) const {
  for (const auto& k : msks) {
    if (k.subset == L) return k;
  }
  throw ProtocolError("user " + std::to_string(id) + " holds no MSK for subset " +
                      formatSubset(L));
}

const MasterSecretKey& UserState::renewalKeyFor(const Subset& T) const {
  for (const auto& k : renewal_keys) {
    if (k.subset == T) return k;
  }
  throw ProtocolError("user " + std::to_string(id) + " holds no renewal key for subset " +
                      formatSubset(T));
}

Simulation::Simulation(SystemConfig cfg, SimOptions opts)
    : cfg_(std::move(cfg)),
      opts_(opts),
      ramp_(deriveRampParams(cfg_.U, cfg_.l, Field::withDefaultPoly(cfg_.L))),
      assignment_(ramp_, cfg_.U, cfg_.l),
      file_bits_(static_cast<i64>(ramp_.m - ramp_.r) * cfg_.L),
      keysched_(ramp_.field, cfg_.group) {
  cfg_.validate();
  if (opts_.ideal_pads) keysched_.enableIdealPads(mixSeed(cfg_.seed, opts_.ideal_seed, 0x1dea1));
  users_.resize(static_cast<size_t>(cfg_.U));
  for (int u = 0; u < cfg_.U; ++u) users_[static_cast<size_t>(u)].id = u;
  file_epochs_.assign(static_cast<size_t>(cfg_.N), 0);
  renew_rngs_.reserve(static_cast<size_t>(cfg_.U));
  for (int u = 0; u < cfg_.U; ++u) {
    renew_rngs_.emplace_back(mixSeed(cfg_.seed, kRenewalStream, static_cast<u64>(u)));
  }
}

void Simulation::prefetch() {
  if (prefetched_) throw ProtocolError("prefetch: already done");
  std::mt19937_64 lib_rng(mixSeed(cfg_.seed, kLibraryStream));
  std::mt19937_64 enc_rng(mixSeed(cfg_.seed, kEncodeStream));
  library_.reserve(static_cast<size_t>(cfg_.N));
  for (int n = 0; n < cfg_.N; ++n) {
    library_.push_back(BitString::random(lib_rng, file_bits_));
    auto pack = packetize(library_.back(), ramp_);
    auto polys = encodeFile(pack, ramp_, enc_rng);
    for (auto& share : makeShares(polys, assignment_, ramp_, n, 0)) {
      for (int u : share.id.subset) {
        users_[static_cast<size_t>(u)].file_cache[share.id] = share;
      }
    }
  }
  prefetched_ = true;
}

void Simulation::establishKeys() {
  if (keys_done_) throw ProtocolError("establishKeys: already done");
  std::mt19937_64 rng(mixSeed(cfg_.seed, kExponentStream));
  std::vector<u64> x(static_cast<size_t>(cfg_.U)), y(static_cast<size_t>(cfg_.U));
  for (auto& v : x) v = 1 + uniformBelow(rng, cfg_.group.p - 1);
  for (auto& v : y) v = 1 + uniformBelow(rng, cfg_.group.p - 1);
  auto keys = runKeyAgreement(cfg_.group, x, y, cfg_.l, net_);
  for (int u = 0; u < cfg_.U; ++u) {
    auto& st = users_[static_cast<size_t>(u)];
    st.exp_x = x[static_cast<size_t>(u)];
    st.exp_y = y[static_cast<size_t>(u)];
    st.msks = std::move(keys[static_cast<size_t>(u)].msks);
    st.renewal_keys = std::move(keys[static_cast<size_t>(u)].renewal_keys);
  }
  keys_done_ = true;
}

void Simulation::renewalEpoch(int t) {
  if (!prefetched_ || !keys_done_) throw ProtocolError("renewalEpoch: placement not complete");
  if (t != epochs_done_ + 1) throw ProtocolError("renewalEpoch: epochs must run in order");
  if (t < 1 || t > cfg_.T) throw ProtocolError("renewalEpoch: epoch outside schedule");
  const std::vector<int>& A = cfg_.schedule[static_cast<size_t>(t - 1)];
  const Field& F = ramp_.field;
  int L = cfg_.L;
  int E = 1;  // single-element packets in simulations
  int bits = E * L;

  // Each user independently draws one degree-(r-1) polynomial per file slot.
  std::map<std::pair<int, int>, std::vector<FieldPoly>> h;  // (user, file)
  for (int u = 0; u < cfg_.U; ++u) {
    for (int n : A) {
      std::vector<FieldPoly> polys;
      for (int s = 0; s < E; ++s) {
        if (opts_.force_zero_renewal) {
          polys.push_back(FieldPoly{std::vector<u64>(static_cast<size_t>(ramp_.r), 0)});
        } else {
          polys.push_back(F.randomPolynomial(renew_rngs_[static_cast<size_t>(u)], ramp_.r - 1));
        }
      }
      h[{u, n}] = std::move(polys);
    }
  }

  size_t slice_start = net_.transcript().size();

  // X-messages: contributions for subsets the sender belongs to, masked under
  // the size-l renewal key. Absent for l=1 (only Y-messages are sent).
  if (cfg_.l >= 2) {
    net_.beginPhase(Phase::RenewalX);
    for (int u = 0; u < cfg_.U; ++u) {
      for (int n : A) {
        int ep = file_epochs_[static_cast<size_t>(n)] + 1;
        for (const auto& T : subsetsOfSize(cfg_.U, cfg_.l)) {
          if (!contains(T, u)) continue;
          for (int i = 0; i < cfg_.l; ++i) {
            u64 pt = assignment_.point(T, i);
            std::vector<u64> plain(static_cast<size_t>(E));
            for (int s = 0; s < E; ++s) plain[static_cast<size_t>(s)] = F.evalPoly(h[{u, n}][static_cast<size_t>(s)], pt);
            DeriveContext ctx{KeyPurpose::RenewalX, T, n, ep, u, i};
            auto key = keysched_.derive(users_[static_cast<size_t>(u)].renewalKeyFor(T), ctx, bits, &ledger_);
            for (int s = 0; s < E; ++s) plain[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
            BroadcastMessage msg;
            msg.sender = u;
            msg.phase = Phase::RenewalX;
            msg.payload = packElements(plain, L);
            msg.payload_bits = bits;
            msg.meta = MessageMeta{n, T, i, ep};
            net_.broadcast(msg);
          }
        }
      }
    }
    net_.commitRound();
  }

  // Y-messages: contributions for subsets the sender is outside of, masked
  // under the MSK of T u {sender}.
  net_.beginPhase(Phase::RenewalY);
  for (int u = 0; u < cfg_.U; ++u) {
    for (int n : A) {
      int ep = file_epochs_[static_cast<size_t>(n)] + 1;
      for (const auto& T : subsetsOfSize(cfg_.U, cfg_.l)) {
        if (contains(T, u)) continue;
        Subset L_union = T;
        L_union.insert(std::lower_bound(L_union.begin(), L_union.end(), u), u);
        for (int i = 0; i < cfg_.l; ++i) {
          u64 pt = assignment_.point(T, i);
          std::vector<u64> plain(static_cast<size_t>(E));
          for (int s = 0; s < E; ++s) plain[static_cast<size_t>(s)] = F.evalPoly(h[{u, n}][static_cast<size_t>(s)], pt);
          DeriveContext ctx{KeyPurpose::RenewalY, L_union, n, ep, u, i};
          auto key = keysched_.derive(users_[static_cast<size_t>(u)].mskFor(L_union), ctx, bits, &ledger_);
          for (int s = 0; s < E; ++s) plain[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
          BroadcastMessage msg;
          msg.sender = u;
          msg.phase = Phase::RenewalY;
          msg.payload = packElements(plain, L);
          msg.payload_bits = bits;
          msg.meta = MessageMeta{n, T, i, ep};
          net_.broadcast(msg);
        }
      }
    }
  }
  net_.commitRound();

  // Index this epoch's broadcasts by (phase, file, subset, point, sender).
  std::map<std::tuple<Phase, int, Subset, int, int>, const BroadcastMessage*> inbox;
  for (size_t idx = slice_start; idx < net_.transcript().size(); ++idx) {
    const auto& msg = net_.transcript()[idx];
    inbox[{msg.phase, msg.meta.file, msg.meta.subset, msg.meta.point, msg.sender}] = &msg;
  }

  // Every user decodes all U contributions for each of its points, aggregates
  // them, and refreshes the cached share in place.
  for (int v = 0; v < cfg_.U; ++v) {
    auto& st = users_[static_cast<size_t>(v)];
    for (int n : A) {
      int ep = file_epochs_[static_cast<size_t>(n)] + 1;
      for (const auto& T : subsetsOfSize(cfg_.U, cfg_.l)) {
        if (!contains(T, v)) continue;
        for (int i = 0; i < cfg_.l; ++i) {
          u64 pt = assignment_.point(T, i);
          std::vector<u64> total(static_cast<size_t>(E), 0);
          for (int s = 0; s < E; ++s) {
            total[static_cast<size_t>(s)] = F.evalPoly(h[{v, n}][static_cast<size_t>(s)], pt);
          }
          for (int u = 0; u < cfg_.U; ++u) {
            if (u == v) continue;
            std::vector<u64> contrib;
            if (contains(T, u)) {
              const auto* msg = inbox.at({Phase::RenewalX, n, T, i, u});
              DeriveContext ctx{KeyPurpose::RenewalX, T, n, ep, u, i};
              auto key = keysched_.derive(st.renewalKeyFor(T), ctx, bits, nullptr);
              contrib = unpackElements(msg->payload, L, static_cast<size_t>(E));
              for (int s = 0; s < E; ++s) contrib[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
            } else {
              Subset L_union = T;
              L_union.insert(std::lower_bound(L_union.begin(), L_union.end(), u), u);
              const auto* msg = inbox.at({Phase::RenewalY, n, T, i, u});
              DeriveContext ctx{KeyPurpose::RenewalY, L_union, n, ep, u, i};
              auto key = keysched_.derive(st.mskFor(L_union), ctx, bits, nullptr);
              contrib = unpackElements(msg->payload, L, static_cast<size_t>(E));
              for (int s = 0; s < E; ++s) contrib[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
            }
            for (int s = 0; s < E; ++s) {
              if (contrib[static_cast<size_t>(s)] != F.evalPoly(h[{u, n}][static_cast<size_t>(s)], pt)) {
                throw ProtocolError("renewal decode mismatch");
              }
              total[static_cast<size_t>(s)] ^= contrib[static_cast<size_t>(s)];
            }
          }
          Share& share = st.file_cache.at(ShareId{n, T, i});
          if (share.epoch != ep - 1) throw ProtocolError("renewal: stale share epoch");
          for (int s = 0; s < E; ++s) {
            share.values[static_cast<size_t>(s)] =
                F.add(share.values[static_cast<size_t>(s)], total[static_cast<size_t>(s)]);
          }
          share.epoch = ep;
        }
      }
    }
  }

  for (int n : A) ++file_epochs_[static_cast<size_t>(n)];
  ++epochs_done_;
}

void Simulation::delivery() {
  if (!prefetched_ || !keys_done_) throw ProtocolError("delivery: placement not complete");
  if (delivered_) throw ProtocolError("delivery: already done");
  int L = cfg_.L;
  int E = 1;
  int bits = E * L;
  auto d = demandVector();

  net_.beginPhase(Phase::Delivery);
  for (int u = 0; u < cfg_.U; ++u) {
    for (const auto& Lset : subsetsOfSize(cfg_.U, cfg_.l + 1)) {
      if (!contains(Lset, u)) continue;
      std::vector<u64> symbol(static_cast<size_t>(E), 0);
      for (int k : Lset) {
        if (k == u) continue;
        Subset T;
        for (int v : Lset) {
          if (v != k) T.push_back(v);
        }
        int i = opts_.inject_bad_point_index ? 0 : rankIn(T, u);
        const Share& share =
            users_[static_cast<size_t>(u)].file_cache.at(ShareId{d[static_cast<size_t>(k)], T, i});
        if (share.epoch != file_epochs_[static_cast<size_t>(d[static_cast<size_t>(k)])]) {
          throw ProtocolError("delivery: cached share epoch out of date");
        }
        for (int s = 0; s < E; ++s) symbol[static_cast<size_t>(s)] ^= share.values[static_cast<size_t>(s)];
      }
      DeriveContext ctx{KeyPurpose::Delivery, Lset, -1, epochs_done_,
                        opts_.inject_pad_reuse ? -1 : u,
                        opts_.inject_pad_reuse ? cfg_.l + 1 : cfg_.l + 1 + rankIn(Lset, u)};
      auto key = keysched_.derive(users_[static_cast<size_t>(u)].mskFor(Lset), ctx, bits, &ledger_);
      for (int s = 0; s < E; ++s) symbol[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
      BroadcastMessage msg;
      msg.sender = u;
      msg.phase = Phase::Delivery;
      msg.payload = packElements(symbol, L);
      msg.payload_bits = bits;
      msg.meta.subset = Lset;
      net_.broadcast(msg);
    }
  }
  net_.commitRound();
  delivered_ = true;
}

std::vector<BitString> Simulation::decodeAll() {
  if (!delivered_) throw ProtocolError("decodeAll: delivery has not run");
  int L = cfg_.L;
  int E = 1;
  int bits = E * L;
  auto d = demandVector();

  std::map<std::pair<int, Subset>, const BroadcastMessage*> inbox;
  for (const auto& msg : net_.transcript()) {
    if (msg.phase == Phase::Delivery) inbox[{msg.sender, msg.meta.subset}] = &msg;
  }

  std::vector<BitString> recovered;
  recovered.reserve(static_cast<size_t>(cfg_.U));
  for (int v = 0; v < cfg_.U; ++v) {
    auto& st = users_[static_cast<size_t>(v)];
    int want = d[static_cast<size_t>(v)];
    int ep = file_epochs_[static_cast<size_t>(want)];
    std::vector<Share> gathered;

    for (const auto& Lset : subsetsOfSize(cfg_.U, cfg_.l + 1)) {
      if (!contains(Lset, v)) continue;
      for (int sender : Lset) {
        if (sender == v) continue;
        const auto* msg = inbox.at({sender, Lset});
        auto elems = unpackElements(msg->payload, L, static_cast<size_t>(E));
        DeriveContext ctx{KeyPurpose::Delivery, Lset, -1, epochs_done_, sender,
                          cfg_.l + 1 + rankIn(Lset, sender)};
        auto key = keysched_.derive(st.mskFor(Lset), ctx, bits, nullptr);
        for (int s = 0; s < E; ++s) elems[static_cast<size_t>(s)] ^= key.values[static_cast<size_t>(s)];
        // Cancel own cached shares of the other users' demands.
        for (int k : Lset) {
          if (k == sender || k == v) continue;
          Subset T;
          for (int w : Lset) {
            if (w != k) T.push_back(w);
          }
          int i = rankIn(T, sender);
          const Share& cached =
              st.file_cache.at(ShareId{d[static_cast<size_t>(k)], T, i});
          for (int s = 0; s < E; ++s) elems[static_cast<size_t>(s)] ^= cached.values[static_cast<size_t>(s)];
        }
        Subset T_own;
        for (int w : Lset) {
          if (w != v) T_own.push_back(w);
        }
        Share got;
        got.id = ShareId{want, T_own, rankIn(T_own, sender)};
        got.epoch = ep;
        got.values = std::move(elems);
        gathered.push_back(std::move(got));
      }
    }
    for (const auto& T : subsetsOfSize(cfg_.U, cfg_.l)) {
      if (!contains(T, v)) continue;
      for (int i = 0; i < cfg_.l; ++i) {
        gathered.push_back(st.file_cache.at(ShareId{want, T, i}));
      }
    }
    recovered.push_back(reconstruct(gathered, assignment_, ramp_, file_bits_));
  }
  return recovered;
}

void Simulation::runAll() {
  prefetch();
  establishKeys();
  for (int t = 1; t <= cfg_.T; ++t) renewalEpoch(t);
  delivery();
  auto recovered = decodeAll();
  auto d = demandVector();
  decode_checked_ = true;
  decode_ok_ = true;
  for (int u = 0; u < cfg_.U; ++u) {
    if (recovered[static_cast<size_t>(u)] != library_[static_cast<size_t>(d[static_cast<size_t>(u)])]) {
      decode_ok_ = false;
    }
  }
}

std::vector<int> Simulation::demandVector() const {
  if (cfg_.demands) return *cfg_.demands;
  std::vector<int> d(static_cast<size_t>(cfg_.U));
  for (int u = 0; u < cfg_.U; ++u) d[static_cast<size_t>(u)] = u;
  return d;
}

Report Simulation::buildReport() const {
  Report rep;
  rep.U = cfg_.U;
  rep.N = cfg_.N;
  rep.l = cfg_.l;
  rep.L = cfg_.L;
  rep.T = cfg_.T;
  rep.seed = cfg_.seed;
  rep.file_bits = file_bits_;
  int E = 1;
  i64 Fs = static_cast<i64>(E) * cfg_.L;
  rep.z0_bits = static_cast<i64>(users_.empty() ? 0 : users_[0].file_cache.size()) * Fs;
  rep.msk_bits = static_cast<i64>(binomial(cfg_.U - 1, cfg_.l)) * Fs;
  rep.renewal_key_bits =
      cfg_.l >= 2 ? static_cast<i64>(binomial(cfg_.U - 1, cfg_.l - 1)) * Fs : 0;
  rep.key_agreement_bits = net_.phaseBits(Phase::KeyAgreement);
  rep.renewal_bits = net_.phaseBits(Phase::RenewalX) + net_.phaseBits(Phase::RenewalY);
  rep.delivery_bits = net_.phaseBits(Phase::Delivery);
  rep.measured_M = static_cast<double>(rep.z0_bits + rep.msk_bits) / static_cast<double>(file_bits_);
  rep.measured_R = static_cast<double>(rep.delivery_bits) / static_cast<double>(file_bits_);
  rep.formula_M = memoryFiles(cfg_.U, cfg_.N, cfg_.l);
  rep.formula_R = loadFiles(cfg_.U, cfg_.l);
  rep.theorem1_R = theorem1Load(cfg_.U, cfg_.N, rep.formula_M);
  rep.lemma1_R = lemma1Bound(cfg_.U, cfg_.N, rep.formula_M + 1);
  rep.l_of_M = remarkInverse(cfg_.U, cfg_.N, rep.formula_M);
  rep.decode_checked = decode_checked_;
  rep.decode_ok = decode_ok_;
  return rep;
}

}  // namespace pcc
