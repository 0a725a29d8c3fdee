#include "apolar/sampling.hpp"

#include "apolar/apolarity.hpp"

#include <limits>
#include <stdexcept>

namespace apolar {

std::int64_t FormSampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("FormSampler::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Reject the incomplete top block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational FormSampler::rational(int num_bound, int den_bound) {
  const auto num = uniform(-num_bound, num_bound);
  const auto den = uniform(1, den_bound);
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

BinaryForm FormSampler::integer_form(int l, int bound) {
  BinaryForm p(l);
  do {
    for (int k = 0; k <= l; ++k) p[k] = static_cast<long>(uniform(-bound, bound));
  } while (p.is_zero());
  return p;
}

BinaryForm FormSampler::rational_form(int l, int num_bound, int den_bound) {
  BinaryForm p(l);
  do {
    for (int k = 0; k <= l; ++k) p[k] = rational(num_bound, den_bound);
  } while (p.is_zero());
  return p;
}

BinaryForm FormSampler::linear_form(int bound) { return integer_form(1, bound); }

LinearSubstitution FormSampler::substitution(int bound) {
  LinearSubstitution g;
  do {
    g = {static_cast<long>(uniform(-bound, bound)), static_cast<long>(uniform(-bound, bound)),
         static_cast<long>(uniform(-bound, bound)), static_cast<long>(uniform(-bound, bound))};
  } while (is_zero(g.det()));
  return g;
}

BinaryForm FormSampler::factored_form(int l, int bound) {
  BinaryForm p = BinaryForm::monomial(0, 0);
  int remaining = l;
  while (remaining > 0) {
    const int mult = static_cast<int>(uniform(1, remaining));
    p = multiply(p, power(linear_form(bound), mult));
    remaining -= mult;
  }
  return p;
}

BinaryForm FormSampler::power_sum(int l, int terms, int bound) {
  BinaryForm p(l);
  do {
    p = BinaryForm(l);
    for (int i = 0; i < terms; ++i) p += power(linear_form(bound), l);
  } while (p.is_zero());
  return p;
}

SplittingType FormSampler::splitting(int max_blocks, int max_multiplicity, int lowest_n) {
  const int m = static_cast<int>(uniform(1, max_blocks));
  SplittingType type;
  int n = static_cast<int>(uniform(lowest_n + 2 * (m - 1), -1));
  for (int i = 0; i < m; ++i) {
    type.push_back({n, static_cast<int>(uniform(1, max_multiplicity))});
    if (i + 1 < m) n = static_cast<int>(uniform(lowest_n + 2 * (m - 2 - i), n - 1));
  }
  return type;
}

BlockAutomorphism FormSampler::automorphism(const SplittingType& type, int bound) {
  BlockAutomorphism a(type);
  do {
    for (std::size_t i = 0; i < type.size(); ++i)
      for (std::size_t j = i; j < type.size(); ++j)
        for (int x = 0; x < type[i].s; ++x)
          for (int y = 0; y < type[j].s; ++y) {
            BinaryForm& e = a.entry(i, j, x, y);
            for (int k = 0; k <= e.degree(); ++k) e[k] = static_cast<long>(uniform(-bound, bound));
          }
  } while (!a.is_invertible());
  return a;
}

H1Element FormSampler::h1_element(const SplittingType& type, int num_bound, int den_bound) {
  H1Element phi = zero_h1(type);
  for (auto& block : phi.components)
    for (auto& v : block)
      for (auto& x : v.values) x = rational(num_bound, den_bound);
  return phi;
}

std::vector<BinaryForm> form_corpus(int l, FormSampler& sampler, int random_count) {
  std::vector<BinaryForm> out;
  for (int a = 0; a <= l; ++a) out.push_back(BinaryForm::monomial(a, l - a));
  if (l >= 2) out.push_back(power(BinaryForm::linear(1, 1), l));
  if (l >= 3) {
    // lambda^(l-2) mu nu with three distinct lines
    out.push_back(multiply(BinaryForm::monomial(l - 2, 1), BinaryForm::linear(1, 1)));
    out.push_back(multiply(multiply(power(BinaryForm::linear(1, 2), l - 2), BinaryForm::linear(1, -1)),
                           BinaryForm::linear(0, 1)));
  }
  if (l >= 1 && l % 2 == 1) {
    const int m = (l - 1) / 2;
    out.push_back(multiply(BinaryForm::monomial(m, m), BinaryForm::linear(1, 1)));
  }
  if (l >= 1) out.push_back(BinaryForm::monomial(l, 0) + BinaryForm::monomial(0, l));

  const int top = generic_cactus_rank(l);
  for (int i = 0; i < random_count; ++i) {
    switch (i % 5) {
      case 0: out.push_back(sampler.integer_form(l, 10)); break;
      case 1: out.push_back(sampler.power_sum(l, 1 + i / 5 % top, 4)); break;
      case 2: out.push_back(sampler.factored_form(l, 5)); break;
      case 3: out.push_back(sampler.rational_form(l, 9, 5)); break;
      default: {
        const BinaryForm& base = out[static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(out.size()) - 1))];
        out.push_back(substitute(base, sampler.substitution(3)));
      }
    }
  }
  return out;
}

}  // namespace apolar
