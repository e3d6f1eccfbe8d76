#include "dilog/certify.hpp"

#include "dilog/errors.hpp"

namespace dilog {

namespace {

CertReport certify(Parity parity, int n,
                   std::vector<IdentitySides<Residue>> (*identities)(Parity, int, const Residue&, const Residue&)) {
  CertReport report;
  report.parity = parity;
  report.n = n;
  report.modulus = family_base(parity, n);
  const Residue u = Residue::make(report.modulus, RatPoly::monomial(Rational(1), 1));
  const Residue one = u.constant(Rational(1));
  for (auto& sides : identities(parity, n, u, one)) {
    CertEntry entry;
    entry.identity_name = std::string(to_string(parity)) + "." + sides.name;
    entry.statement = sides.statement;
    entry.pass = sides.lhs == sides.rhs;
    entry.lhs_degree = sides.lhs.rep().degree();
    entry.rhs_degree = sides.rhs.rep().degree();
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace

const char* to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw Error(ErrorCode::InvalidArgument, "family must be 'even' or 'odd', got '" + std::string(text) + "'");
}

RatPoly family_base(Parity parity, int n) { return parity == Parity::Even ? base_even(n) : base_odd(n); }

bool CertReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return !entries.empty();
}

CertReport verify_step_identities(int n, Parity parity) {
  return certify(parity, n, &step_identities<Residue>);
}

CertReport verify_cyclotomic(int n, Parity parity) {
  return certify(parity, n, &cyclotomic_identities<Residue>);
}

}  // namespace dilog
