#pragma once

// Exact certification of the family identities in Q[x]/(base(x)).
//
// Each identity is written once, generically over the ring it is evaluated
// in: Residue for the exact proof, BigReal for the numeric cross-check at
// the isolated root. A congruence modulo the base polynomial holds at every
// root of it, so no irreducibility assumption is needed.

#include "dilog/algebra.hpp"
#include "dilog/ratpoly.hpp"

#include <string>
#include <vector>

namespace dilog {

enum class Parity { Even, Odd };

const char* to_string(Parity parity);
/// "even" / "odd"; throws Error(InvalidArgument) otherwise.
Parity parse_parity(std::string_view text);

/// base_even(n) or base_odd(n).
RatPoly family_base(Parity parity, int n);

template <typename Ring>
struct IdentitySides {
  std::string name;
  std::string statement;
  Ring lhs;
  Ring rhs;
};

/// Relations behind the argument substitution z = u^(n+1) (even) or
/// z = u^(n+2) (odd) in the Rogers duplication identity.
template <typename Ring>
std::vector<IdentitySides<Ring>> step_identities(Parity parity, int n, const Ring& u, const Ring& one) {
  const unsigned long un = static_cast<unsigned long>(n);
  std::vector<IdentitySides<Ring>> out;
  if (parity == Parity::Even) {
    const Ring z = pow(u, un + 1);
    const Ring un_pow = pow(u, un);
    out.push_back({"inverse_argument", "u^n (2 - u^(n+1)) = 1", un_pow * (2 * one - z), one});
    out.push_back({"duplication_argument", "2 u^(n+1) - u^(2n+2) = u", 2 * z - z * z, u});
    out.push_back({"ratio", "u (1 - u^n) = u^(n+1) (1 - u^(n+1))", u * (one - un_pow), z * (one - z)});
  } else {
    const Ring z = pow(u, un + 2);
    const Ring un_pow = pow(u, un);
    const Ring u2 = u * u;
    out.push_back({"inverse_argument", "u^n (2 - u^(n+2)) = 1", un_pow * (2 * one - z), one});
    out.push_back({"duplication_argument", "2 u^(n+2) - u^(2n+4) = u^2", 2 * z - z * z, u2});
    out.push_back({"ratio", "u^2 (1 - u^n) = u^(n+2) (1 - u^(n+2))", u2 * (one - un_pow), z * (one - z)});
  }
  return out;
}

/// The multiplicative ("cyclotomic" in Lewin's sense) relations that turn
/// the Rogers form of the ladder into the Li2 form with -n^2 log^2 u.
template <typename Ring>
std::vector<IdentitySides<Ring>> cyclotomic_identities(Parity parity, int n, const Ring& u, const Ring& one) {
  const unsigned long un = static_cast<unsigned long>(n);
  std::vector<IdentitySides<Ring>> out;
  if (parity == Parity::Even) {
    out.push_back({"cyclotomic", "(1 - u) (1 - u^n)^(2n) = u^(2n^2) (1 - u^(n+1))^(2n+2)",
                   (one - u) * pow(one - pow(u, un), 2 * un),
                   pow(u, 2 * un * un) * pow(one - pow(u, un + 1), 2 * un + 2)});
  } else {
    const Ring u2 = u * u;
    const Ring z = pow(u, un + 2);
    out.push_back({"cyclotomic", "(1 - u^2) (1 - u^n)^n = u^(n^2) (1 - u^(n+2))^(n+2)",
                   (one - u2) * pow(one - pow(u, un), un), pow(u, un * un) * pow(one - z, un + 2)});
    out.push_back({"auxiliary", "1 - u^2 = (1 - u^(n+2))^2", one - u2, (one - z) * (one - z)});
  }
  return out;
}

struct CertEntry {
  std::string identity_name;  // e.g. "even.cyclotomic"
  std::string statement;
  bool pass = false;
  int lhs_degree = -1;  // degrees of the reduced representatives
  int rhs_degree = -1;
};

struct CertReport {
  Parity parity = Parity::Even;
  int n = 0;
  RatPoly modulus;
  std::vector<CertEntry> entries;

  bool all_pass() const;
};

/// Checks step_identities(parity, n) as exact congruences mod family_base.
CertReport verify_step_identities(int n, Parity parity);
/// Checks cyclotomic_identities(parity, n) as exact congruences.
CertReport verify_cyclotomic(int n, Parity parity);

}  // namespace dilog
