#pragma once

#include <string>

#include "hashfam/bounds.hpp"
#include "hashfam/mt_engine.hpp"

namespace hashfam {

/// Serialization of BoundReport. The field set is the same for PHF and SHF
/// (absent values render as null in JSON and empty in CSV); reals carry
/// 9 significant digits in text/CSV and full double precision in JSON.

std::string report_to_text(const BoundReport& r);
std::string report_to_json(const BoundReport& r);

/// CSV column order (stable):
/// family,n,m,w,parts,numerator,numerator_attained,denominator,n_clll,
/// n_lll,n_expurgation,log_phi_prime_tau,multiplicity,q,
/// sz_max_columns,sz_asymptotic_max_columns
std::string report_csv_header();
std::string report_to_csv_row(const BoundReport& r);

std::string stats_to_text(const MtStats& s);
std::string stats_to_json(const MtStats& s);

}  // namespace hashfam
