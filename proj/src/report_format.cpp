#include "hashfam/report_format.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hashfam {

namespace {

std::string real9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string parts_list(const std::vector<int>& parts) {
  std::ostringstream out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json j;
  j["family"] = r.family == FamilyKind::Phf ? "phf" : "shf";
  j["n"] = r.n;
  j["m"] = r.m;
  j["w"] = r.w;
  j["parts"] = r.parts;
  j["numerator"] = r.numerator;
  j["numerator_attained"] = r.numerator_attained;
  j["denominator"] = r.denominator;
  j["n_clll"] = r.n_clll;
  j["n_lll"] = r.n_lll ? nlohmann::json(*r.n_lll) : nlohmann::json(nullptr);
  j["n_expurgation"] = r.n_expurgation ? nlohmann::json(*r.n_expurgation) : nlohmann::json(nullptr);
  j["log_phi_prime_tau"] = r.log_phi_prime ? nlohmann::json(*r.log_phi_prime) : nlohmann::json(nullptr);
  j["multiplicity"] = r.multiplicity ? nlohmann::json(r.multiplicity->get_str()) : nlohmann::json(nullptr);
  j["q"] = r.q ? nlohmann::json(r.q->get_str()) : nlohmann::json(nullptr);
  j["sz_max_columns"] =
      r.sz_max_columns ? nlohmann::json(r.sz_max_columns->get_str()) : nlohmann::json(nullptr);
  j["sz_asymptotic_max_columns"] = r.sz_asymptotic_max_columns
                                       ? nlohmann::json(r.sz_asymptotic_max_columns->get_str())
                                       : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string report_to_text(const BoundReport& r) {
  std::ostringstream out;
  const bool shf = r.family == FamilyKind::Shf;
  out << "family:        " << (shf ? "SHF" : "PHF") << '\n';
  out << "n:             " << r.n << '\n';
  out << "m:             " << r.m << '\n';
  if (shf)
    out << "parts:         {" << parts_list(r.parts) << "}  (w = " << r.w << ")\n";
  else
    out << "w:             " << r.w << '\n';
  out << (shf ? "S_n(w):        " : "A_n(w):        ") << real9(r.numerator);
  if (!r.numerator_attained) out << "  (supremum, not attained: n < 2w)";
  out << '\n';
  out << (shf ? "ln(1/q):       " : "D_m(w):        ") << real9(r.denominator) << '\n';
  if (r.log_phi_prime) out << "ln phi'(tau):  " << real9(*r.log_phi_prime) << '\n';
  if (r.multiplicity) out << "m_w:           " << r.multiplicity->get_str() << '\n';
  if (r.q) out << "q:             " << r.q->get_str() << '\n';
  out << "N (theorem):   " << r.n_clll << '\n';
  if (r.n_lll) out << "N (LLL):       " << *r.n_lll << '\n';
  if (r.n_expurgation) out << "N (expurg.):   " << *r.n_expurgation << '\n';
  if (r.sz_max_columns)
    out << "SZ max n at N: " << r.sz_max_columns->get_str() << '\n';
  if (r.sz_asymptotic_max_columns)
    out << "CE max n at N: " << r.sz_asymptotic_max_columns->get_str() << '\n';
  return out.str();
}

std::string report_to_json(const BoundReport& r) { return report_json(r).dump(2) + "\n"; }

std::string report_csv_header() {
  return "family,n,m,w,parts,numerator,numerator_attained,denominator,n_clll,"
         "n_lll,n_expurgation,log_phi_prime_tau,multiplicity,q,"
         "sz_max_columns,sz_asymptotic_max_columns";
}

std::string report_to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << (r.family == FamilyKind::Phf ? "phf" : "shf") << ',' << r.n << ',' << r.m << ',' << r.w << ',';
  if (!r.parts.empty()) out << '"' << parts_list(r.parts) << '"';
  out << ',' << real9(r.numerator) << ',' << (r.numerator_attained ? "true" : "false") << ','
      << real9(r.denominator) << ',' << r.n_clll << ',';
  if (r.n_lll) out << *r.n_lll;
  out << ',';
  if (r.n_expurgation) out << *r.n_expurgation;
  out << ',';
  if (r.log_phi_prime) out << real9(*r.log_phi_prime);
  out << ',';
  if (r.multiplicity) out << r.multiplicity->get_str();
  out << ',';
  if (r.q) out << r.q->get_str();
  out << ',';
  if (r.sz_max_columns) out << r.sz_max_columns->get_str();
  out << ',';
  if (r.sz_asymptotic_max_columns) out << r.sz_asymptotic_max_columns->get_str();
  return out.str();
}

std::string stats_to_text(const MtStats& s) {
  std::ostringstream out;
  out << "seed:       " << s.seed << '\n'
      << "resamples:  " << s.resamples << '\n'
      << "scans:      " << s.scans << '\n'
      << "succeeded:  " << (s.succeeded ? "yes" : "no") << '\n'
      << "elapsed_s:  " << real9(s.elapsed_seconds) << '\n';
  return out.str();
}

std::string stats_to_json(const MtStats& s) {
  nlohmann::json j;
  j["seed"] = s.seed;
  j["resamples"] = s.resamples;
  j["scans"] = s.scans;
  j["succeeded"] = s.succeeded;
  j["elapsed_seconds"] = s.elapsed_seconds;
  return j.dump(2) + "\n";
}

}  // namespace hashfam
