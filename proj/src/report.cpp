#include "pcc/report.hpp"

#include <cmath>
#include <cstdio>
#include <span>

namespace pcc {

double memoryFiles(int U, int N, int l) {
  return static_cast<double>(N) * l / (U - l) + 1.0 / l;
}

double loadFiles(int U, int l) { return static_cast<double>(U) / l; }

double theorem1Load(int U, int N, double M) {
  double disc = (M * U - 1) * (M * U - 1) - 4.0 * N * U;
  return 2.0 * U * (N + M) / (M * U + 1 + std::sqrt(disc));
}

std::optional<double> remarkInverse(int U, int N, double M) {
  double disc = (M * U - 1) * (M * U - 1) - 4.0 * N * U;
  if (disc < 0) return std::nullopt;
  return (M * U + 1 + std::sqrt(disc)) / (2.0 * (N + M));
}

double lemma1Bound(int U, int N, double M_prime) {
  double Mm = M_prime - 1;
  double disc = (1 - Mm * U) * (1 - Mm * U) - 4.0 * U * N;
  return 2.0 * U * (N + Mm) / (1 + Mm * U + std::sqrt(disc));
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string Report::toText() const {
  std::string s;
  s += "U=" + std::to_string(U) + "\n";
  s += "N=" + std::to_string(N) + "\n";
  s += "l=" + std::to_string(l) + "\n";
  s += "L=" + std::to_string(L) + "\n";
  s += "T=" + std::to_string(T) + "\n";
  s += "seed=" + std::to_string(seed) + "\n";
  s += "file_bits=" + std::to_string(file_bits) + "\n";
  s += "z0_bits=" + std::to_string(z0_bits) + "\n";
  s += "msk_bits=" + std::to_string(msk_bits) + "\n";
  s += "renewal_key_bits=" + std::to_string(renewal_key_bits) + "\n";
  s += "key_agreement_bits=" + std::to_string(key_agreement_bits) + "\n";
  s += "renewal_bits=" + std::to_string(renewal_bits) + "\n";
  s += "delivery_bits=" + std::to_string(delivery_bits) + "\n";
  s += "measured_M=" + fmt9(measured_M) + "\n";
  s += "measured_R=" + fmt9(measured_R) + "\n";
  s += "formula_M=" + fmt9(formula_M) + "\n";
  s += "formula_R=" + fmt9(formula_R) + "\n";
  s += "theorem1_R=" + fmt9(theorem1_R) + "\n";
  s += "lemma1_R=" + fmt9(lemma1_R) + "\n";
  s += "l_of_M=" + (l_of_M ? fmt9(*l_of_M) : std::string("out-of-range")) + "\n";
  s += "decode_ok=" + std::string(!decode_checked ? "unchecked" : (decode_ok ? "1" : "0")) + "\n";
  return s;
}

TradeoffRow formulaRow(int U, int N, int l) {
  TradeoffRow row;
  row.l = l;
  row.M = memoryFiles(U, N, l);
  row.R_formula = loadFiles(U, l);
  row.R_theorem1 = theorem1Load(U, N, row.M);
  row.R_lemma1 = lemma1Bound(U, N, row.M + 1);
  return row;
}

std::string tradeoffCsv(std::span<const TradeoffRow> rows) {
  std::string s = "l,M,R_measured,R_formula,R_theorem1,R_lemma1\n";
  for (const auto& r : rows) {
    s += std::to_string(r.l);
    s += ',' + fmt9(r.M);
    s += ',' + (r.R_measured ? fmt9(*r.R_measured) : std::string());
    s += ',' + fmt9(r.R_formula);
    s += ',' + fmt9(r.R_theorem1);
    s += ',' + fmt9(r.R_lemma1);
    s += '\n';
  }
  return s;
}

}  // namespace pcc
