#pragma once

#include "apolar/binary_form.hpp"
#include "apolar/moduli.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace apolar {

/// Seeded source of random test data. Only the raw mt19937_64 stream is
/// used (its output is fixed by the standard), so a seed reproduces the same
/// forms on every platform.
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// num/den with |num| <= num_bound and 1 <= den <= den_bound.
  Rational rational(int num_bound, int den_bound);

  /// Integer coefficients uniform in [-bound, bound]^(l+1), redrawn until nonzero.
  BinaryForm integer_form(int l, int bound);
  BinaryForm rational_form(int l, int num_bound, int den_bound);
  /// Nonzero linear form with integer coefficients in [-bound, bound].
  BinaryForm linear_form(int bound);
  /// Invertible substitution with integer entries in [-bound, bound].
  LinearSubstitution substitution(int bound);

  /// Product of random linear forms with random multiplicities.
  BinaryForm factored_form(int l, int bound);
  /// Sum of `terms` random l-th powers of linear forms.
  BinaryForm power_sum(int l, int terms, int bound);

  /// Strictly decreasing splitting type with at most max_blocks summands.
  SplittingType splitting(int max_blocks, int max_multiplicity, int lowest_n);
  BlockAutomorphism automorphism(const SplittingType& type, int bound);
  H1Element h1_element(const SplittingType& type, int num_bound, int den_bound);

 private:
  std::mt19937_64 engine_;
};

/// Canonical forms of degree l (powers, monomials, lambda^(l-2) mu nu,
/// X0^m X1^m (X0+X1), ...) followed by `random_count` seeded forms mixing
/// dense random coefficients, power sums of every rank, factored forms and
/// GL2 transforms, so that every cactus stratum is represented.
std::vector<BinaryForm> form_corpus(int l, FormSampler& sampler, int random_count);

}  // namespace apolar
