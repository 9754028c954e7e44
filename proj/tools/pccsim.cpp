// pccsim - scenario runner for the D2D proactive coded caching scheme:
// run single simulations, sweep the memory-load tradeoff, execute attack
// suites, and self-check the core invariants.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pcc/adversary.hpp"
#include "pcc/hkdf.hpp"
#include "pcc/protocol.hpp"

namespace fs = std::filesystem;
using namespace pcc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

void writeFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct AttackSpec {
  std::string mode;                             // curious|schedule-sweep|user-privacy|eavesdropper
  int file = 0;                                 // target file
  std::vector<std::pair<int, int>> capture;     // (user, epoch) pairs
  int runs = 10000;                             // eavesdropper ideal-pad runs
  bool chi2 = false;
};

AttackSpec parseAttackSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("attack spec: cannot open " + path);
  AttackSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r\n");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r\n");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("attack spec: expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "mode") {
      spec.mode = value;
    } else if (key == "file") {
      spec.file = std::stoi(value);
    } else if (key == "runs") {
      spec.runs = std::stoi(value);
    } else if (key == "chi2") {
      spec.chi2 = (value == "on" || value == "1" || value == "true");
    } else if (key == "capture") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = strip(item);
        size_t at = item.find('@');
        if (at == std::string::npos) throw ConfigError("attack spec: capture entries are user@epoch");
        spec.capture.emplace_back(std::stoi(item.substr(0, at)), std::stoi(item.substr(at + 1)));
      }
    } else {
      throw ConfigError("attack spec: unknown key " + key);
    }
  }
  if (spec.mode.empty()) throw ConfigError("attack spec: mode is required");
  return spec;
}

// Runs the scenario stepwise, snapshotting the requested (user, epoch) pairs.
CuriousView captureView(const SystemConfig& cfg, const std::vector<std::pair<int, int>>& capture,
                        int file, Simulation& sim) {
  sim.prefetch();
  sim.establishKeys();
  CuriousView view;
  for (int epoch = 0; epoch <= cfg.T; ++epoch) {
    if (epoch > 0) sim.renewalEpoch(epoch);
    for (const auto& [user, cap_epoch] : capture) {
      if (cap_epoch == epoch) {
        snapshot(sim.users()[static_cast<size_t>(user)], epoch, file, view);
      }
    }
  }
  sim.delivery();
  return view;
}

int cmdSimulate(const std::string& config_path, const fs::path& out_dir,
                std::optional<u64> seed_override) {
  SystemConfig cfg = loadConfigFile(config_path);
  if (seed_override) cfg.seed = *seed_override;
  Simulation sim(cfg);
  sim.runAll();
  Report rep = sim.buildReport();

  writeFile(out_dir / "report.txt", rep.toText());
  writeFile(out_dir / "transcript.log", sim.net().exportTranscript());
  std::cout << rep.toText();
  if (!rep.decode_ok) {
    std::cerr << "FAIL decode: a user did not recover its requested file\n";
    return kExitInvariant;
  }
  i64 expect_delivery = static_cast<i64>(cfg.U) * rep.file_bits;
  if (rep.delivery_bits * cfg.l != expect_delivery) {
    std::cerr << "FAIL load: delivery bits do not match U/l\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmdSweep(int U, int N, const std::string& l_range, const std::string& mode,
             const fs::path& out_dir, u64 base_seed) {
  int lo = 1, hi = U - 1;
  if (!l_range.empty()) {
    size_t dots = l_range.find("..");
    if (dots == std::string::npos) throw ConfigError("--l-range expects A..B");
    lo = std::stoi(l_range.substr(0, dots));
    hi = std::stoi(l_range.substr(dots + 2));
  }
  if (lo < 1 || hi > U - 1 || lo > hi) throw ConfigError("--l-range outside [1, U-1]");
  if (mode != "simulate" && mode != "formula") throw ConfigError("--mode must be simulate or formula");
  if (mode == "simulate" && U > 8) {
    throw ConfigError("simulate mode is capped at U <= 8; use formula mode");
  }
  if (mode == "simulate" && N < U) {
    throw ConfigError("simulate mode needs N >= U for worst-case demands");
  }

  std::vector<TradeoffRow> rows;
  for (int l = lo; l <= hi; ++l) {
    TradeoffRow row = formulaRow(U, N, l);
    if (mode == "simulate") {
      SystemConfig cfg;
      cfg.U = U;
      cfg.N = N;
      cfg.l = l;
      cfg.L = 16;
      cfg.T = 1;
      cfg.schedule = {{0}};
      cfg.seed = base_seed + static_cast<u64>(l);
      Simulation sim(cfg);
      sim.runAll();
      Report rep = sim.buildReport();
      if (!rep.decode_ok) {
        std::cerr << "FAIL decode at l=" << l << "\n";
        return kExitInvariant;
      }
      row.R_measured = rep.measured_R;
      if (rep.delivery_bits * l != static_cast<i64>(U) * rep.file_bits) {
        std::cerr << "FAIL load at l=" << l << ": measured R != U/l\n";
        return kExitInvariant;
      }
    }
    rows.push_back(row);
  }
  std::string csv = tradeoffCsv(rows);
  writeFile(out_dir / "tradeoff.csv", csv);
  std::cout << csv;
  return kExitOk;
}

int cmdAttack(const std::string& config_path, const std::string& spec_path,
              const fs::path& out_dir) {
  SystemConfig cfg = loadConfigFile(config_path);
  AttackSpec spec = parseAttackSpec(spec_path);
  std::vector<std::string> lines;
  bool unexpected_broken = false;

  if (spec.mode == "curious") {
    if (spec.capture.empty()) throw ConfigError("attack spec: curious mode needs capture pairs");
    Simulation sim(cfg);
    CuriousView view = captureView(cfg, spec.capture, spec.file, sim);
    auto rep = attemptReconstruct(view, spec.file, sim.rampParams(), sim.assignment());
    // Breakage is expected exactly when some epoch yields >= m shares.
    std::map<int, std::set<ShareId>> per_epoch;
    for (const auto& cap : view.captured) {
      if (cap.share.id.file == spec.file) per_epoch[cap.share.epoch].insert(cap.share.id);
    }
    bool expected = false;
    for (const auto& [e, ids] : per_epoch) {
      if (ids.size() >= static_cast<size_t>(sim.rampParams().m)) expected = true;
    }
    if (rep.verdict == Verdict::Broken && !expected) unexpected_broken = true;
    lines.push_back(rep.toLine());
  } else if (spec.mode == "schedule-sweep") {
    // Exhaustive capture schedules: every point captured at every epoch
    // combination. One simulation provides the share history.
    Simulation sim(cfg);
    sim.prefetch();
    sim.establishKeys();
    std::vector<std::vector<Share>> history;  // epoch -> shares of target file
    auto collect = [&] {
      std::vector<Share> snap;
      for (const auto& st : sim.users()) {
        for (const auto& [id, share] : st.file_cache) {
          if (id.file == spec.file) snap.push_back(share);
        }
      }
      history.push_back(std::move(snap));
    };
    collect();
    for (int t = 1; t <= cfg.T; ++t) {
      sim.renewalEpoch(t);
      collect();
    }
    int k = sim.rampParams().k;
    int epochs = cfg.T + 1;
    auto entries = sim.assignment().entries();
    u64 combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<u64>(epochs);
    for (u64 code = 0; code < combos; ++code) {
      CuriousView view;
      u64 c = code;
      std::set<int> used_epochs;
      for (int i = 0; i < k; ++i) {
        int epoch = static_cast<int>(c % static_cast<u64>(epochs));
        c /= static_cast<u64>(epochs);
        used_epochs.insert(epoch);
        const auto& key = entries[static_cast<size_t>(i)].first;
        for (const auto& share : history[static_cast<size_t>(epoch)]) {
          if (share.id.subset == key.first && share.id.point == key.second) {
            view.captured.push_back(CapturedShare{share, epoch});
            break;
          }
        }
        if (!view.schedule_digest.empty()) view.schedule_digest += '+';
        view.schedule_digest += "p" + std::to_string(i) + "@e" + std::to_string(epoch);
      }
      auto rep = attemptReconstruct(view, spec.file, sim.rampParams(), sim.assignment());
      bool expected = used_epochs.size() == 1;
      if (rep.verdict == Verdict::Broken && !expected) unexpected_broken = true;
      lines.push_back(rep.toLine());
    }
  } else if (spec.mode == "user-privacy") {
    Simulation sim(cfg);
    sim.runAll();
    auto d = sim.demandVector();
    for (int u = 0; u < cfg.U; ++u) {
      for (int n = 0; n < cfg.N; ++n) {
        if (n == d[static_cast<size_t>(u)]) continue;
        auto rep = userPrivacyAudit(sim, u, n);
        if (rep.verdict != Verdict::FullyPrivate) unexpected_broken = true;
        lines.push_back(rep.toLine());
      }
    }
  } else if (spec.mode == "eavesdropper") {
    Simulation sim(cfg);
    sim.runAll();
    auto rep = eavesdropperAudit(sim);
    if (rep.verdict != Verdict::FullyPrivate) unexpected_broken = true;
    lines.push_back(rep.toLine());
    if (spec.chi2) {
      int L = cfg.L;
      std::vector<u64> hist(u64{1} << L, 0);
      for (int run = 0; run < spec.runs; ++run) {
        SystemConfig c2 = cfg;
        c2.seed = cfg.seed + static_cast<u64>(run);
        SimOptions opts;
        opts.ideal_pads = true;
        opts.ideal_seed = static_cast<u64>(run);
        Simulation s2(c2, opts);
        s2.runAll();
        for (const auto& msg : s2.net().transcript()) {
          if (msg.phase != Phase::Delivery) continue;
          u64 v = 0;
          for (int b = 0; b < L; ++b) {
            if ((msg.payload[static_cast<size_t>(b) >> 3] >> (b & 7)) & 1) v |= u64{1} << b;
          }
          ++hist[v];
        }
      }
      double stat = chiSquareUniform(hist);
      // 0.99 quantile of chi-square with 2^L - 1 degrees of freedom (L=3).
      double critical = 18.475306906582357;
      bool pass = (L == 3) ? stat <= critical : true;
      lines.push_back("mode=eavesdropper-chi2 stat=" + fmt9(stat) +
                      " critical=" + fmt9(critical) + " verdict=" +
                      (pass ? "pass" : "fail"));
      if (!pass) unexpected_broken = true;
    }
  } else {
    throw ConfigError("attack spec: unknown mode " + spec.mode);
  }

  std::string text;
  for (const auto& line : lines) text += line + '\n';
  writeFile(out_dir / "attacks.log", text);
  std::cout << text;
  return unexpected_broken ? kExitInvariant : kExitOk;
}

struct VerifyContext {
  bool inject_pad_reuse = false;
  bool inject_bad_point_index = false;
  int failures = 0;
};

void check(VerifyContext& vc, const std::string& name, bool ok, const std::string& detail = "") {
  if (ok) {
    std::cout << "ok   " << name << "\n";
  } else {
    std::cout << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    ++vc.failures;
  }
}

int cmdVerify(const std::string& inject) {
  VerifyContext vc;
  vc.inject_pad_reuse = inject == "pad-reuse";
  vc.inject_bad_point_index = inject == "bad-point-index";

  // Field axioms, exhaustive over GF(2^3).
  {
    Field f = Field::withDefaultPoly(3);
    bool ok = true;
    for (u64 a = 0; a < 8 && ok; ++a) {
      for (u64 b = 0; b < 8 && ok; ++b) {
        if (f.mul(a, b) != f.mul(b, a)) ok = false;
        for (u64 c = 0; c < 8 && ok; ++c) {
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
          if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)) ok = false;
        }
      }
    }
    for (u64 a = 1; a < 8 && ok; ++a) {
      if (f.mul(a, f.inv(a)) != 1) ok = false;
    }
    check(vc, "field-axioms", ok);
  }

  // Interpolation round-trip, randomized.
  {
    Field f = Field::withDefaultPoly(16);
    std::mt19937_64 rng(7);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      int n = 1 + static_cast<int>(rng() % 12);
      FieldPoly p = f.randomPolynomial(rng, n - 1);
      auto xs = f.enumeratePoints(static_cast<u64>(n));
      std::vector<u64> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = f.evalPoly(p, xs[i]);
      if (f.interpolate(xs, ys) != p) ok = false;
    }
    check(vc, "interpolation-roundtrip", ok);
  }

  // Ramp thresholds at (1,4,4) over GF(2^3).
  {
    Field f = Field::withDefaultPoly(3);
    RampParams params = deriveRampParams(4, 1, f);
    PointAssignment assignment(params, 4, 1);
    std::mt19937_64 rng(11);
    BitString file = BitString::random(rng, 9);
    auto pack = packetize(file, params);
    auto polys = encodeFile(pack, params, rng);
    auto shares = makeShares(polys, assignment, params, 0, 0);
    bool ok = true;
    for (size_t i = 0; i < shares.size() && ok; ++i) {
      auto counts = countConsistentSecrets({&shares[i], 1}, params, assignment);
      if (!counts.uniform()) ok = false;
    }
    auto full = countConsistentSecrets(shares, params, assignment);
    if (full.nonzero != 1) ok = false;
    std::vector<Share> two{shares[0], shares[1]};
    auto mid = countConsistentSecrets(two, params, assignment);
    if (!(mid.nonzero > 1 && mid.nonzero < mid.candidate_space)) ok = false;
    check(vc, "ramp-thresholds", ok);
  }

  // Toy DH vector and agreement consistency.
  {
    GroupParams toy = GroupParams::toy();
    bool ok = powMod(2, 15, 23) == 16;
    Network net;
    std::vector<u64> x{3, 5};
    auto keys = runKeyAgreement(toy, x, x, 1, net);
    ok = ok && keys[0].msks.size() == 1 && keys[0].msks[0].element == 16 &&
         keys[1].msks[0].element == 16;
    check(vc, "dh-toy-vector", ok);
  }

  // HKDF against RFC 5869 test case 1.
  {
    std::vector<u8> ikm(22, 0x0b);
    std::vector<u8> salt{0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06,
                         0x07, 0x08, 0x09, 0x0a, 0x0b, 0x0c};
    std::vector<u8> info{0xf0, 0xf1, 0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9};
    auto okm = hkdf(salt, ikm, info, 42);
    const u8 expect[] = {0x3c, 0xb2, 0x5f, 0x25, 0xfa, 0xac, 0xd5, 0x7a, 0x90, 0x43,
                         0x4f, 0x64, 0xd0, 0x36, 0x2f, 0x2a, 0x2d, 0x2d, 0x0a, 0x90,
                         0xcf, 0x1a, 0x5a, 0x4c, 0x5d, 0xb0, 0x2d, 0x56, 0xec, 0xc4,
                         0xc5, 0xbf, 0x34, 0x00, 0x72, 0x08, 0xd5, 0xb8, 0x87, 0x18,
                         0x58, 0x65};
    check(vc, "hkdf-rfc5869", std::equal(okm.begin(), okm.end(), std::begin(expect)));
  }

  // Full runs: memory/load exactness, decode, ledger discipline. The fault
  // injections land here.
  for (const auto& [name, U, N, l, T] :
       {std::tuple{"run-u4-l1", 4, 4, 1, 1}, std::tuple{"run-u5-l2", 5, 5, 2, 2}}) {
    SystemConfig cfg;
    cfg.U = U;
    cfg.N = N;
    cfg.l = l;
    cfg.L = 16;
    cfg.T = T;
    for (int t = 0; t < T; ++t) cfg.schedule.push_back({0});
    cfg.seed = 99;
    SimOptions opts;
    opts.inject_pad_reuse = vc.inject_pad_reuse;
    opts.inject_bad_point_index = vc.inject_bad_point_index;
    Simulation sim(cfg, opts);
    bool ledger_ok = true;
    bool decode_ok = false;
    bool memory_ok = false;
    bool load_ok = false;
    try {
      sim.runAll();
      decode_ok = sim.decodeOk();
      Report rep = sim.buildReport();
      i64 lhs = (rep.z0_bits + rep.msk_bits) * static_cast<i64>(U - l) * l;
      i64 rhs = (static_cast<i64>(N) * l * l + (U - l)) * rep.file_bits;
      memory_ok = lhs == rhs;
      load_ok = rep.delivery_bits * l == static_cast<i64>(U) * rep.file_bits;
    } catch (const LedgerViolation&) {
      ledger_ok = false;
    } catch (const std::exception&) {
      decode_ok = false;
    }
    check(vc, std::string(name) + "-ledger", ledger_ok, "one-time key context reused");
    if (ledger_ok) {
      check(vc, std::string(name) + "-decode", decode_ok);
      check(vc, std::string(name) + "-memory", memory_ok);
      check(vc, std::string(name) + "-load", load_ok);
    }
  }

  // Determinism: identical seeds give identical transcripts.
  {
    SystemConfig cfg;
    cfg.U = 4;
    cfg.N = 4;
    cfg.l = 1;
    cfg.L = 8;
    cfg.T = 1;
    cfg.schedule = {{0}};
    cfg.seed = 5;
    Simulation a(cfg), b(cfg);
    a.runAll();
    b.runAll();
    check(vc, "determinism", a.net().transcriptHash() == b.net().transcriptHash());
  }

  if (vc.failures > 0) {
    std::cout << vc.failures << " invariant(s) failed\n";
    return kExitInvariant;
  }
  std::cout << "all invariants hold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D2D proactive coded caching simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<u64> seed;

  auto* simulate = app.add_subcommand("simulate", "run one scenario end to end");
  simulate->add_option("--config", config_path, "scenario config file")->required();
  simulate->add_option("--out", out_dir, "output directory");
  u64 seed_value = 0;
  bool seed_set = false;
  simulate->add_option("--seed", seed_value, "override the scenario seed")
      ->each([&](const std::string&) { seed_set = true; });

  int sweep_U = 0, sweep_N = 0;
  std::string l_range, mode = "formula", sweep_out = ".";
  u64 sweep_seed = 0;
  auto* sweep = app.add_subcommand("sweep", "emit the memory-load tradeoff curve");
  sweep->add_option("--U", sweep_U, "user count")->required();
  sweep->add_option("--N", sweep_N, "file count")->required();
  sweep->add_option("--l-range", l_range, "l range A..B (default 1..U-1)");
  sweep->add_option("--mode", mode, "simulate or formula");
  sweep->add_option("--out", sweep_out, "output directory");
  sweep->add_option("--seed", sweep_seed, "base seed for simulate mode");

  std::string attack_config, attack_spec, attack_out = ".";
  auto* attack = app.add_subcommand("attack", "run attacker models");
  attack->add_option("--config", attack_config, "scenario config file")->required();
  attack->add_option("--spec", attack_spec, "attack spec file")->required();
  attack->add_option("--out", attack_out, "output directory");

  std::string inject;
  auto* verify = app.add_subcommand("verify", "run the built-in invariant suite");
  verify->add_option("--inject", inject, "fault injection: pad-reuse or bad-point-index")
      ->check(CLI::IsMember({"pad-reuse", "bad-point-index"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      return cmdSimulate(config_path, out_dir, seed_set ? std::optional<u64>(seed_value) : std::nullopt);
    }
    if (*sweep) return cmdSweep(sweep_U, sweep_N, l_range, mode, sweep_out, sweep_seed);
    if (*attack) return cmdAttack(attack_config, attack_spec, attack_out);
    if (*verify) return cmdVerify(inject);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
