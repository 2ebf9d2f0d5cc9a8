#include "cobalt/realize/realize.hpp"

#include <stdexcept>

namespace cobalt {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::undetermined: return "undetermined";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::admits: return "admits";
    case Verdict::fails: return "fails";
    case Verdict::undetermined: return "undetermined";
  }
  return "";
}

namespace {

template <class F>
RealizationReport run(const RationalSeries<F>& z, uint64_t p, bool factored_completely,
                      const std::vector<UniPoly<F>>& irreducibles, bool separable, bool inseparable_pattern) {
  RealizationReport r;
  r.characteristic = p;
  r.series = z.str();
  r.cond_rational = true;
  r.cond_separable = separable ? Tri::yes : Tri::no;
  if (!separable)
    r.witnesses.push_back({"separable", inseparable_pattern
                                            ? "denominator " + z.denominator().str("T") +
                                                  " has an irreducible factor with vanishing derivative"
                                            : "denominator " + z.denominator().str("T") + " has a repeated factor"});
  const int dp = z.N(), dq = z.M();
  r.cond_degree = dp <= dq + 1;
  if (!r.cond_degree)
    r.witnesses.push_back({"degree", "deg P = " + std::to_string(dp) + " > deg Q + 1 = " + std::to_string(dq + 1)});

  if (!separable) {
    r.cond_residues = p == 0 ? Tri::yes : Tri::undetermined;
    if (p != 0) r.witnesses.push_back({"residues", "not evaluated: denominator is not separable"});
  } else if (!factored_completely) {
    r.cond_residues = p == 0 ? Tri::yes : Tri::undetermined;
    r.witnesses.push_back({"residues", "denominator factorization not certified; residues not computed"});
  } else {
    auto res = residues(z, irreducibles);
    r.residue_sum_zero = res.sum_zero;
    bool all = true;
    for (const auto& pr : res.poles) {
      ResidueEntry e;
      e.pole = "roots of " + pr.factor.str("T");
      e.value = pr.value.representative().str("t");
      e.degree = pr.factor.degree();
      e.in_prime_field = qr_in_prime_field(pr.value);
      if (!e.in_prime_field && p != 0)
        r.witnesses.push_back({"residues", "residue " + pr.value.str() + " at " + e.pole + " is not in F_" +
                                               std::to_string(p)});
      all &= e.in_prime_field;
      r.residues.push_back(std::move(e));
    }
    r.residues.push_back({"0", scalar_str(res.at_zero), 1, true});
    r.residues.push_back({"infinity", scalar_str(res.at_infinity), 1, true});
    if (!res.sum_zero) throw std::logic_error("residues do not sum to zero");
    r.cond_residues = (p == 0 || all) ? Tri::yes : Tri::no;
  }

  if (r.cond_separable == Tri::no || !r.cond_degree || r.cond_residues == Tri::no)
    r.verdict = Verdict::fails;
  else if (r.cond_separable == Tri::yes && r.cond_residues == Tri::yes)
    r.verdict = Verdict::admits;
  else
    r.verdict = Verdict::undetermined;
  return r;
}

}  // namespace

RealizationReport check_abelian(const RationalSeries<Fp>& z) {
  const uint64_t p = field_modulus(z.denominator());
  if (p == 0) throw std::invalid_argument("series over F_p carries no modulus");
  auto sf = squarefree_part(z.denominator());
  std::vector<UniPoly<Fp>> irr;
  if (sf.is_separable && z.M() > 0)
    for (const auto& [f, m] : factor_fp(z.denominator()).factors) irr.push_back(f);
  return run(z, p, true, irr, sf.is_separable, sf.inseparable_detected);
}

RealizationReport check_abelian(const RationalSeries<Rational>& z, uint64_t characteristic) {
  if (characteristic != 0) {
    if (!modular::is_prime(characteristic)) throw std::invalid_argument("characteristic must be 0 or a prime");
    RationalSeries<Fp> zp;
    try {
      zp = reduce_mod_p(z, characteristic);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("series is not defined modulo " + std::to_string(characteristic));
    }
    auto r = check_abelian(zp);
    r.series = z.str() + " mod " + std::to_string(characteristic);
    return r;
  }
  auto sf = squarefree_part(z.denominator());
  std::vector<UniPoly<Rational>> irr;
  bool complete = true;
  if (sf.is_separable && z.M() > 0) {
    try {
      auto fac = factor_rational(z.denominator());
      complete = fac.complete;
      for (const auto& [f, m] : fac.factors) irr.push_back(f);
    } catch (const std::length_error&) {
      complete = false;
    }
  }
  return run(z, 0, complete, irr, sf.is_separable, false);
}

}  // namespace cobalt
