#pragma once
// report.hpp - closed-form memory/load expressions, per-run reports, and
// tradeoff-curve rows.

#include <optional>
#include <span>

#include "pcc/common.hpp"

namespace pcc {

// M(l) = Nl/(U-l) + 1/l
double memoryFiles(int U, int N, int l);
// R = U/l
double loadFiles(int U, int l);
// R(M) = 2U(N+M) / (MU + 1 + sqrt((MU-1)^2 - 4NU))
double theorem1Load(int U, int N, double M);
// l(M) = (MU + 1 + sqrt((MU-1)^2 - 4NU)) / (2(N+M)); nullopt when the
// discriminant is negative (M out of range).
std::optional<double> remarkInverse(int U, int N, double M);
// Centralized baseline bound evaluated at M' (equals U/l at M' = M(l)+1).
double lemma1Bound(int U, int N, double M_prime);

std::string fmt9(double v);  // fixed 9 fractional digits

struct Report {
  int U = 0, N = 0, l = 0, L = 0, T = 0;
  u64 seed = 0;
  i64 file_bits = 0;          // B
  i64 z0_bits = 0;            // per-user file cache
  i64 msk_bits = 0;           // per-user size-(l+1) MSKs at F_s bits each
  i64 renewal_key_bits = 0;   // per-user size-l keys, reported separately
  i64 key_agreement_bits = 0;
  i64 renewal_bits = 0;       // X+Y phases
  i64 delivery_bits = 0;
  double measured_M = 0;      // (z0 + msk) / B
  double measured_R = 0;      // delivery / B
  double formula_M = 0;
  double formula_R = 0;
  double theorem1_R = 0;
  double lemma1_R = 0;        // at M+1
  std::optional<double> l_of_M;
  bool decode_checked = false;
  bool decode_ok = false;

  std::string toText() const;
};

struct TradeoffRow {
  int l = 0;
  double M = 0;
  std::optional<double> R_measured;
  double R_formula = 0;
  double R_theorem1 = 0;
  double R_lemma1 = 0;  // at M+1
};

TradeoffRow formulaRow(int U, int N, int l);

// Header "l,M,R_measured,R_formula,R_theorem1,R_lemma1"; empty R_measured
// cell in formula mode; 9 fixed fractional digits throughout.
std::string tradeoffCsv(std::span<const TradeoffRow> rows);

}  // namespace pcc
