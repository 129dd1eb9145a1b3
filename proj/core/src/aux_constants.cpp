// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#include "slitwave/aux_constants.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "slitwave/boundary_layer.hpp"
#include "slitwave/errors.hpp"
#include "slitwave/geometry.hpp"
#include "slitwave/strip_greens.hpp"

namespace slitwave {

namespace {

const std::complex<double> kI(0.0, 1.0);

// One lock per cache file so independent caches do not serialize and
// several handles to the same file stay consistent (single writer,
// shared readers).
std::shared_mutex& lock_for(const std::string& path) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::unique_ptr<std::shared_mutex>> registry;
  std::lock_guard<std::mutex> guard(registry_mutex);
  auto& slot = registry[path];
  if (!slot) slot = std::make_unique<std::shared_mutex>();
  return *slot;
}

double parse_double_token(const std::string& token, int line_no) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') {
    throw ParseError("bad numeric field '" + token + "' in constants cache",
                     line_no);
  }
  return value;
}

std::string format_full(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

bool AuxConstants::gamma_plus_defined() const {
  return !std::isnan(gamma_plus.real()) && !std::isnan(gamma_plus.imag());
}

bool AuxConstants::matches(double omega_, double p_plus_, double p_minus_,
                           double tol) const {
  return std::abs(omega - omega_) <= tol && std::abs(p_plus - p_plus_) <= tol &&
         std::abs(p_minus - p_minus_) <= tol;
}

AuxConstants compute_aux_constants(double omega, double p_plus, double p_minus,
                                   double tolerance, long n_terms) {
  if (!(tolerance > 0.0)) {
    throw DomainError("compute_aux_constants: tolerance must be positive");
  }
  AuxConstants aux;
  aux.omega = omega;
  aux.p_plus = p_plus;
  aux.p_minus = p_minus;
  aux.tolerance = tolerance;
  aux.c_xi = compute_c_xi(tolerance);
  aux.g_const = compute_g_const(omega, n_terms);
  aux.gamma_minus = compute_gamma(omega, p_minus, p_minus, n_terms);
  if (p_plus == 0.0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    aux.gamma_plus = {nan, nan};
  } else {
    aux.gamma_plus = compute_gamma(omega, p_plus, p_plus, n_terms);
  }
  aux.gamma_tilde = compute_gamma(omega, p_plus, p_minus, n_terms);
  return aux;
}

FarFieldAmplitudes far_field_amplitudes(const AuxConstants& aux) {
  FarFieldAmplitudes ff;
  ff.s_plus = kI * std::cos(aux.omega * aux.p_plus) / aux.omega;
  ff.s_minus = kI * std::cos(aux.omega * aux.p_minus) / aux.omega;
  ff.eta = (aux.omega * aux.gamma_tilde).real();
  return ff;
}

double coupling_eta(const AuxConstants& aux) {
  const double cp = std::cos(aux.omega * aux.p_plus);
  const double cm = std::cos(aux.omega * aux.p_minus);
  if (std::abs(cp - 1.0) > 1e-9 || std::abs(cm - 1.0) > 1e-9) {
    throw RegimeError(
        "coupling_eta: requires the design normalization cos(omega p) = 1");
  }
  return (aux.omega * aux.gamma_tilde).real();
}

ConstantsCache::ConstantsCache() {
  const char* dir = std::getenv("SLITWAVE_CACHE_DIR");
  if (dir != nullptr && *dir != '\0') {
    path_ = std::string(dir) + "/constants.cache";
  } else {
    path_ = "slitwave_constants.cache";
  }
}

ConstantsCache::ConstantsCache(std::string path) : path_(std::move(path)) {}

std::vector<AuxConstants> ConstantsCache::all() const {
  std::shared_lock<std::shared_mutex> lock(lock_for(path_));
  std::vector<AuxConstants> records;
  std::ifstream in(path_);
  if (!in) return records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.size() != 13) {
      throw ParseError("expected 13 fields in constants cache record",
                       line_no);
    }
    AuxConstants aux;
    aux.omega = parse_double_token(tokens[0], line_no);
    aux.p_plus = parse_double_token(tokens[1], line_no);
    aux.p_minus = parse_double_token(tokens[2], line_no);
    aux.c_xi = parse_double_token(tokens[3], line_no);
    aux.g_const = {parse_double_token(tokens[4], line_no),
                   parse_double_token(tokens[5], line_no)};
    aux.gamma_plus = {parse_double_token(tokens[6], line_no),
                      parse_double_token(tokens[7], line_no)};
    aux.gamma_minus = {parse_double_token(tokens[8], line_no),
                       parse_double_token(tokens[9], line_no)};
    aux.gamma_tilde = {parse_double_token(tokens[10], line_no),
                       parse_double_token(tokens[11], line_no)};
    aux.tolerance = parse_double_token(tokens[12], line_no);
    records.push_back(aux);
  }
  return records;
}

std::optional<AuxConstants> ConstantsCache::lookup(double omega, double p_plus,
                                                   double p_minus,
                                                   double tolerance) const {
  for (const auto& aux : all()) {
    if (aux.matches(omega, p_plus, p_minus) && aux.tolerance == tolerance) {
      return aux;
    }
  }
  return std::nullopt;
}

void ConstantsCache::insert(const AuxConstants& aux) {
  std::unique_lock<std::shared_mutex> lock(lock_for(path_));
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("constants cache not writable: " + path_);
  out << format_full(aux.omega) << ' ' << format_full(aux.p_plus) << ' '
      << format_full(aux.p_minus) << ' ' << format_full(aux.c_xi) << ' '
      << format_full(aux.g_const.real()) << ' '
      << format_full(aux.g_const.imag()) << ' '
      << format_full(aux.gamma_plus.real()) << ' '
      << format_full(aux.gamma_plus.imag()) << ' '
      << format_full(aux.gamma_minus.real()) << ' '
      << format_full(aux.gamma_minus.imag()) << ' '
      << format_full(aux.gamma_tilde.real()) << ' '
      << format_full(aux.gamma_tilde.imag()) << ' '
      << format_full(aux.tolerance) << '\n';
}

AuxConstants ConstantsCache::get(double omega, double p_plus, double p_minus,
                                 double tolerance, long n_terms) {
  if (auto hit = lookup(omega, p_plus, p_minus, tolerance)) return *hit;
  const AuxConstants aux =
      compute_aux_constants(omega, p_plus, p_minus, tolerance, n_terms);
  // Another worker may have raced us to it; appending a duplicate record
  // is harmless (lookup returns the first match).
  insert(aux);
  return aux;
}

AuxConstants aux_for_config(const WaveguideConfig& config,
                            ConstantsCache& cache, double tolerance) {
  return cache.get(config.omega, config.p_plus - config.wall_x,
                   config.p_minus - config.wall_x, tolerance);
}

}  // namespace slitwave
