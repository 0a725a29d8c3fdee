#include "apolar/verify.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/duality.hpp"
#include "apolar/moduli.hpp"
#include "apolar/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

void SuiteReport::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (!first_counterexample) first_counterexample = what;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"duality", "dims", "quartics", "action"};
  return names;
}

namespace {

std::string pair_text(const BinaryForm& p, const BinaryForm& q) {
  return "p = " + render(p) + ", q = " + render(q, kDualVariables);
}

void duality_suite(SuiteReport& report, FormSampler& sampler) {
  const int exhaustive = std::min(report.max_degree, 6);
  int monomial_pairs = 0;
  for (int l = 0; l <= exhaustive; ++l)
    for (int s = 0; s <= l; ++s)
      for (int d = 0; d <= l; ++d)
        for (int k = 0; k <= d; ++k) {
          const BinaryForm p = BinaryForm::monomial(s, l - s);
          const BinaryForm q = BinaryForm::monomial(k, d - k);
          report.record(verify_duality(p, q), "duality fails for " + pair_text(p, q));
          ++monomial_pairs;
        }

  const int random_pairs = 200;
  for (int i = 0; i < random_pairs; ++i) {
    const int l = static_cast<int>(sampler.uniform(0, report.max_degree));
    const int d = static_cast<int>(sampler.uniform(0, l));
    const BinaryForm p = sampler.rational_form(l, 9, 7);
    const BinaryForm q = sampler.rational_form(d, 9, 7);
    report.record(verify_duality(p, q), "duality fails for " + pair_text(p, q));
    report.record(d_l_inverse(d_l_forward(p)) == p, "D_l inverse fails for " + render(p));

    // Transposes compose: (q1 q2)^t = q2^t o q1^t.
    const int d2 = static_cast<int>(sampler.uniform(0, l - d));
    const BinaryForm q2 = sampler.rational_form(d2, 5, 3);
    const DualVector phi = d_l_forward(p);
    report.record(transpose_mult(multiply(q, q2), phi) == transpose_mult(q2, transpose_mult(q, phi)),
                  "transpose composition fails for " + pair_text(p, q));
  }
  report.details = {{"monomial_pairs", monomial_pairs}, {"random_pairs", random_pairs}};
}

void dims_suite(SuiteReport& report, FormSampler& sampler) {
  int forms = 0;
  for (int l = 0; l <= report.max_degree; ++l) {
    for (const BinaryForm& p : form_corpus(l, sampler, 25)) {
      ++forms;
      const ApolarProfile prof = sylvester_generators(p);
      const std::string where = "p = " + render(p);
      // Above degree l every operator annihilates.
      for (const BinaryForm* g : {&prof.g1, &prof.g2})
        if (g->degree() <= l) report.record(apolar_apply(*g, p).is_zero(), "generator does not annihilate " + where);
      report.record(prof.d1 + prof.d2 == l + 2 && prof.d1 <= prof.d2, "generator degrees wrong for " + where);
      report.record(gcd_forms(prof.g1, prof.g2).degree() == 0, "generators share a zero for " + where);
      report.record(prof.cactus_rank == cactus_from_waring(l, prof.waring_rank),
                    "rank relation fails for " + where);
      for (int d = 0; d <= l; ++d) {
        const int a = ann_dim(p, d);
        const int s = coker_dim(p, d);
        const std::string at = where + ", d = " + std::to_string(d);
        report.record(a == ann_dim_closed_form(l, prof.d1, prof.d2, d), "ann_dim closed form fails for " + at);
        report.record(s == l - 2 * d + a, "coker_dim != l - 2d + ann_dim for " + at);
        report.record(s == coker_dim_closed_form(l, d, prof.cactus_rank).dimension,
                      "coker_dim crank formula fails for " + at);
        const auto strata = level_set_strata(l, d, s);
        report.record(satisfies_level_set_formula(l, d, prof.cactus_rank, s) &&
                          std::find(strata.begin(), strata.end(), prof.cactus_rank) != strata.end(),
                      "level-set formula fails for " + at);
      }
    }
  }
  report.details = {{"forms", forms}};
}

// det [[a0, a1, a2 + 2t], [a1, a2 - t, a3], [a2 + 2t, a3, a4]]
Rational hankel_pencil(const std::array<Rational, 5>& a, const Rational& t) {
  RationalMatrix m{{a[0], a[1], a[2] + 2 * t}, {a[1], a[2] - t, a[3]}, {a[2] + 2 * t, a[3], a[4]}};
  return determinant(m);
}

void quartics_suite(SuiteReport& report, FormSampler& sampler) {
  struct Row {
    std::string name;
    BinaryForm form;
    int rk;
    int crank;
    Rational g3;
  };
  const BinaryForm x0 = BinaryForm::linear(1, 0), x1 = BinaryForm::linear(0, 1), x0_plus_x1 = BinaryForm::linear(1, 1);
  std::vector<Row> rows{
      {"X0^4", power(x0, 4), 1, 1, 0},
      {"X0^3*X1", BinaryForm::monomial(3, 1), 4, 2, 0},
      {"X0^2*X1^2", BinaryForm::monomial(2, 2), 3, 3, Rational(-1, 216)},
      {"X0^2*X1*(X0+X1)", multiply(BinaryForm::monomial(2, 1), x0_plus_x1), 3, 3, Rational(-1, 216)},
  };
  // X0 X1 (X0+X1)(X0+t X1): g3 = -(t-2)(t+1)(2t-1)/432, zero exactly at t in {-1, 1/2, 2}.
  for (const Rational& t : {Rational(-1), Rational(1, 2), Rational(2), Rational(3), Rational(-2), Rational(5)}) {
    const BinaryForm form = multiply(multiply(BinaryForm::monomial(1, 1), x0_plus_x1), BinaryForm::linear(1, t));
    const Rational g3 = -(t - 2) * (t + 1) * (2 * t - 1) / 432;
    const int rank = is_zero(g3) ? 2 : 3;
    rows.push_back({"X0*X1*(X0+X1)*(X0+" + to_string(t) + "*X1)", form, rank, rank, g3});
  }

  nlohmann::json table = nlohmann::json::array();
  for (const Row& row : rows) {
    const ApolarProfile prof = sylvester_generators(row.form);
    const QuarticInvariants inv = quartic_invariants(row.form);
    report.record(prof.waring_rank == row.rk, "Waring rank of " + row.name);
    report.record(prof.cactus_rank == row.crank, "cactus rank of " + row.name);
    report.record(inv.g3 == row.g3, "g3 of " + row.name);
    report.record(quartic_stratum(row.form) == row.crank, "quartic stratum of " + row.name);
    table.push_back({{"form", row.name},
                     {"waring_rank", prof.waring_rank},
                     {"cactus_rank", prof.cactus_rank},
                     {"g3", to_string(inv.g3)}});
  }

  const int random_quartics = 100;
  for (int i = 0; i < random_quartics; ++i) {
    const BinaryForm p = i % 2 ? sampler.integer_form(4, 6) : sampler.factored_form(4, 4);
    const QuarticInvariants inv = quartic_invariants(p);
    for (const Rational& t : {Rational(0), Rational(1), Rational(-1), Rational(2)})
      report.record(hankel_pencil(inv.a, t) == 4 * t * t * t - inv.g2 * t + inv.g3,
                    "g2/g3 do not match the defining determinant for " + render(p));
    report.record(is_zero(inv.delta) == !is_squarefree(p), "delta vs multiple roots for " + render(p));
    report.record(inv.j.has_value() == !is_zero(inv.delta), "J defined off Z(delta) for " + render(p));
    report.record(quartic_stratum(p) == cactus_rank(p), "quartic stratum vs cactus rank for " + render(p));
  }
  report.details = {{"table", table}, {"random_quartics", random_quartics}};
}

H1Element rank2_as_h1(const DualVector& phi1, const DualVector& phi2) { return H1Element{{{phi1}, {phi2}}}; }

void action_suite(SuiteReport& report, FormSampler& sampler) {
  const int triples = 100;
  const int max_l = std::max(report.max_degree, 1);
  for (int i = 0; i < triples; ++i) {
    const int l1 = static_cast<int>(sampler.uniform(0, max_l - 1));
    const int l2 = static_cast<int>(sampler.uniform(l1 + 1, max_l));
    const int d = l2 - l1;
    const DualVector phi1 = d_l_forward(sampler.rational_form(l1, 9, 5));
    const DualVector phi2 = d_l_forward(sampler.rational_form(l2, 9, 5));
    auto random_element = [&] {
      Rational u1, u2;
      do u1 = sampler.rational(5, 3); while (is_zero(u1));
      do u2 = sampler.rational(5, 3); while (is_zero(u2));
      return Rank2Automorphism{u1, u2, sampler.rational_form(d, 5, 3)};
    };
    const Rank2Automorphism a = random_element(), b = random_element();
    const std::string where = "l1 = " + std::to_string(l1) + ", l2 = " + std::to_string(l2);

    const Rank2Automorphism id{1, 1, BinaryForm(d)};
    report.record(act_rank2(id, phi1, phi2) == std::pair{phi1, phi2}, "rank-2 identity fails, " + where);
    const auto [b1, b2] = act_rank2(b, phi1, phi2);
    report.record(act_rank2(compose(a, b), phi1, phi2) == act_rank2(a, b1, b2), "rank-2 composition fails, " + where);

    const SplittingType type{{-2 - l1, 1}, {-2 - l2, 1}};
    BlockAutomorphism block(type);
    block.entry(0, 0, 0, 0) = BinaryForm::monomial(0, 0, a.u1);
    block.entry(1, 1, 0, 0) = BinaryForm::monomial(0, 0, a.u2);
    block.entry(0, 1, 0, 0) = a.q;
    const auto [a1, a2] = act_rank2(a, phi1, phi2);
    report.record(act(block, rank2_as_h1(phi1, phi2)) == rank2_as_h1(a1, a2),
                  "rank-2 formula disagrees with block action, " + where);
  }

  const int splittings = 50;
  for (int i = 0; i < splittings; ++i) {
    const SplittingType type = sampler.splitting(3, 2, -2 - max_l);
    const BlockAutomorphism a = sampler.automorphism(type, 3), b = sampler.automorphism(type, 3);
    const H1Element phi = sampler.h1_element(type, 9, 5);
    const std::string where = "splitting #" + std::to_string(i);
    report.record(act(BlockAutomorphism::identity(type), phi) == phi, "block identity fails, " + where);
    report.record(act(compose(a, b), phi) == act(a, act(b, phi)), "block composition fails, " + where);
  }
  report.details = {{"rank2_triples", triples}, {"splittings", splittings}};
}

}  // namespace

SuiteReport run_suite(std::string_view name, std::uint64_t seed, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  report.max_degree = max_degree;
  FormSampler sampler(seed);
  if (name == "duality")
    duality_suite(report, sampler);
  else if (name == "dims")
    dims_suite(report, sampler);
  else if (name == "quartics")
    quartics_suite(report, sampler);
  else if (name == "action")
    action_suite(report, sampler);
  else
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return report;
}

}  // namespace apolar
