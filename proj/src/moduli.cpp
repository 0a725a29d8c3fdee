#include "apolar/moduli.hpp"

#include "apolar/apolarity.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace apolar {

// --- splitting types -------------------------------------------------------

void validate_splitting(const SplittingType& type) {
  if (type.empty()) throw std::invalid_argument("splitting type needs at least one summand");
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type[i].s < 1) throw std::invalid_argument("splitting multiplicities must be >= 1");
    if (i > 0 && type[i - 1].n <= type[i].n)
      throw std::invalid_argument("splitting degrees must be strictly decreasing");
  }
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("malformed splitting '" + std::string(whole) + "'");
  return value;
}

}  // namespace

SplittingType parse_splitting(std::string_view text) {
  SplittingType out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("malformed splitting '" + std::string(text) + "': expected n:s");
    out.push_back({parse_int(item.substr(0, colon), text), parse_int(item.substr(colon + 1), text)});
    start = comma + 1;
  }
  validate_splitting(out);
  return out;
}

ModuliDescriptor describe(const SplittingType& splitting) {
  validate_splitting(splitting);
  const std::size_t m = splitting.size();
  ModuliDescriptor out{splitting, {}, 0, std::vector<std::vector<int>>(m, std::vector<int>(m)), 0};
  for (std::size_t i = 0; i < m; ++i) {
    const auto [ni, si] = splitting[i];
    out.l.push_back(-2 - ni);
    out.h1_dim += si * forms_dim(-2 - ni);
    for (std::size_t j = 0; j < m; ++j) {
      const auto [nj, sj] = splitting[j];
      out.aut_block_degrees[i][j] = ni - nj;
      if (i <= j) out.aut_dim += si * sj * forms_dim(ni - nj);
    }
  }
  return out;
}

// --- block automorphisms ---------------------------------------------------

BlockAutomorphism::BlockAutomorphism(SplittingType type) : type_(std::move(type)) {
  validate_splitting(type_);
  const std::size_t m = type_.size();
  blocks_.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      blocks_[i].emplace_back(static_cast<std::size_t>(type_[i].s * type_[j].s),
                              BinaryForm(type_[i].n - type_[j].n));
}

BlockAutomorphism BlockAutomorphism::identity(SplittingType type) {
  BlockAutomorphism out(std::move(type));
  for (std::size_t i = 0; i < out.blocks(); ++i)
    for (int a = 0; a < out.type_[i].s; ++a) out.entry(i, i, a, a) = BinaryForm::monomial(0, 0);
  return out;
}

std::size_t BlockAutomorphism::slot(std::size_t i, std::size_t j, int a, int b) const {
  if (i > j || j >= type_.size()) throw std::out_of_range("block index outside the upper triangle");
  if (a < 0 || a >= type_[i].s || b < 0 || b >= type_[j].s) throw std::out_of_range("entry index outside block");
  return static_cast<std::size_t>(a * type_[j].s + b);
}

const BinaryForm& BlockAutomorphism::entry(std::size_t i, std::size_t j, int a, int b) const {
  return blocks_[i][j - i][slot(i, j, a, b)];
}

BinaryForm& BlockAutomorphism::entry(std::size_t i, std::size_t j, int a, int b) {
  return blocks_[i][j - i][slot(i, j, a, b)];
}

bool BlockAutomorphism::is_invertible() const {
  for (std::size_t i = 0; i < blocks(); ++i) {
    const int s = type_[i].s;
    RationalMatrix diag(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) diag(a, b) = entry(i, i, a, b)[0];
    if (is_zero(determinant(diag))) return false;
  }
  return true;
}

BlockAutomorphism compose(const BlockAutomorphism& a, const BlockAutomorphism& b) {
  if (a.type() != b.type()) throw std::invalid_argument("composing automorphisms of different bundles");
  BlockAutomorphism out(a.type());
  const auto& type = a.type();
  for (std::size_t i = 0; i < type.size(); ++i)
    for (std::size_t k = i; k < type.size(); ++k)
      for (int x = 0; x < type[i].s; ++x)
        for (int z = 0; z < type[k].s; ++z) {
          BinaryForm& target = out.entry(i, k, x, z);
          for (std::size_t j = i; j <= k; ++j)
            for (int y = 0; y < type[j].s; ++y)
              target += multiply(a.entry(i, j, x, y), b.entry(j, k, y, z));
        }
  return out;
}

H1Element zero_h1(const SplittingType& type) {
  validate_splitting(type);
  H1Element out;
  for (const auto& [n, s] : type) out.components.emplace_back(static_cast<std::size_t>(s), DualVector::zero(-2 - n));
  return out;
}

H1Element act(const BlockAutomorphism& a, const H1Element& phi) {
  const auto& type = a.type();
  if (phi.components.size() != type.size()) throw std::invalid_argument("act: H1 element has wrong block count");
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (phi.components[i].size() != static_cast<std::size_t>(type[i].s))
      throw std::invalid_argument("act: H1 block " + std::to_string(i) + " has wrong multiplicity");
    for (const auto& v : phi.components[i])
      if (v.degree != -2 - type[i].n) throw std::invalid_argument("act: H1 block " + std::to_string(i) + " has wrong degree");
  }
  if (!a.is_invertible()) throw std::invalid_argument("act: singular diagonal block");

  H1Element out = zero_h1(type);
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (-2 - type[i].n < 0) continue;  // H^1(O(n)) = 0 for n >= -1
    for (int x = 0; x < type[i].s; ++x) {
      DualVector& target = out.components[i][x];
      for (std::size_t j = i; j < type.size(); ++j)
        for (int y = 0; y < type[j].s; ++y) target += transpose_mult(a.entry(i, j, x, y), phi.components[j][y]);
    }
  }
  return out;
}

Rank2Automorphism compose(const Rank2Automorphism& a, const Rank2Automorphism& b) {
  if (a.q.degree() != b.q.degree()) throw std::invalid_argument("composing rank-2 automorphisms of different bundles");
  return {a.u1 * b.u1, a.u2 * b.u2, b.q * a.u1 + a.q * b.u2};
}

std::pair<DualVector, DualVector> act_rank2(const Rank2Automorphism& a, const DualVector& phi1,
                                            const DualVector& phi2) {
  if (is_zero(a.u1) || is_zero(a.u2)) throw std::invalid_argument("act_rank2: u1 and u2 must be nonzero");
  if (a.q.degree() != phi2.degree - phi1.degree)
    throw std::invalid_argument("act_rank2: deg Q must equal l2 - l1");
  return {a.u1 * phi1 + transpose_mult(a.q, phi2), a.u2 * phi2};
}

// --- fibres ------------------------------------------------------------------

namespace {

void check_fiber_args(int n1, int n2, int degree) {
  if (n1 <= n2) throw std::invalid_argument("fiber_dim: need n1 > n2");
  if (n1 > -2) throw std::invalid_argument("fiber_dim: need n1 <= -2");
  if (degree != -2 - n2)
    throw std::invalid_argument("fiber_dim: form degree " + std::to_string(degree) + " != -2 - n2 = " +
                                std::to_string(-2 - n2));
}

}  // namespace

int fiber_dim(int n1, int n2, const BinaryForm& p) {
  check_fiber_args(n1, n2, p.degree());
  if (p.is_zero()) throw ZeroFormError("fiber_dim: zero form");
  return coker_dim(p, n1 - n2);
}

int fiber_dim_of_functional(int n1, int n2, const DualVector& phi) {
  check_fiber_args(n1, n2, phi.degree);
  if (is_zero_vector(phi.values)) throw ZeroFormError("fiber_dim: zero functional");
  const RationalMatrix m = transpose_mult_matrix(phi, n1 - n2);
  return static_cast<int>(m.rows() - rank(m));
}

FiberReport fiber_report(int n1, int n2, const BinaryForm& p) {
  const int s = fiber_dim(n1, n2, p);
  const int l = p.degree();
  const int d = n1 - n2;
  const int r = cactus_rank(p);
  return {l, d, r, s, coker_dim_closed_form(l, d, r).branch};
}

bool satisfies_level_set_formula(int l, int d, int r, int s) {
  if ((s == l - 2 * d) != (r > d)) return false;
  if (s > std::max(l - 2 * d, 0) && r != l - d + 1 - s) return false;
  if (s == 0 && l - 2 * d < 0 && r < l - d + 1) return false;
  return true;
}

StratumMembership stratum_membership(const BinaryForm& p, int d) {
  if (p.is_zero()) throw ZeroFormError("stratum_membership: zero form");
  const int l = p.degree();
  const int s = coker_dim(p, d);
  const int r = cactus_rank(p);
  if (!satisfies_level_set_formula(l, d, r, s))
    throw std::logic_error("stratum_membership: (r, s) = (" + std::to_string(r) + ", " + std::to_string(s) +
                           ") contradicts the level-set formula for l = " + std::to_string(l) +
                           ", d = " + std::to_string(d));
  return {l, d, r, s};
}

namespace {

std::vector<int> stratum_range(int from, int to) {
  std::vector<int> out;
  for (int r = std::max(from, 1); r <= to; ++r) out.push_back(r);
  return out;
}

}  // namespace

std::vector<int> level_set_strata(int l, int d, int s) {
  const int top = generic_cactus_rank(l);
  if (s == l - 2 * d) return stratum_range(d + 1, top);
  if (s > l - 2 * d && s > 0) return stratum_range(l - d + 1 - s, std::min(l - d + 1 - s, top));
  if (s > l - 2 * d && s == 0) return stratum_range(l - d + 1, top);
  return {};
}

std::optional<std::vector<int>> level_set_strata_by_range(int l, int d, int s) {
  const int half = l / 2;
  std::optional<std::vector<int>> low, high;
  if (d <= half) {
    if (l - 2 * d < s && s <= l - d)
      low = stratum_range(l - d + 1 - s, l - d + 1 - s);
    else if (s == l - 2 * d)
      low = stratum_range(d + 1, half + 1);
    else
      low = std::vector<int>{};
  }
  if (d >= half) {
    if (0 < s && s <= l - d)
      high = stratum_range(l - d + 1 - s, l - d + 1 - s);
    else if (s == 0)
      high = stratum_range(l - d + 1, half + 1);
    else
      high = std::vector<int>{};
  }
  if (low && high && *low != *high) return std::nullopt;
  return low ? low : high;
}

// --- small degrees -----------------------------------------------------------

QuarticInvariants quartic_invariants(const BinaryForm& p) {
  if (p.degree() != 4) throw std::invalid_argument("quartic_invariants: form must have degree 4");
  QuarticInvariants out;
  for (int k = 0; k <= 4; ++k) out.a[k] = p[4 - k] / Rational(binomial(4, k));
  const auto& [a0, a1, a2, a3, a4] = out.a;
  out.g2 = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2;
  out.g3 = a0 * a2 * a4 + 2 * a1 * a2 * a3 - a2 * a2 * a2 - a0 * a3 * a3 - a1 * a1 * a4;
  out.delta = out.g2 * out.g2 * out.g2 - 27 * out.g3 * out.g3;
  if (!is_zero(out.delta)) out.j = out.g2 * out.g2 * out.g2 / out.delta;
  return out;
}

int quartic_stratum(const BinaryForm& p) {
  if (p.degree() != 4) throw std::invalid_argument("quartic_stratum: form must have degree 4");
  if (p.is_zero()) throw ZeroFormError("quartic_stratum: zero form");
  if (is_linear_power(p)) return 1;
  return is_zero(quartic_invariants(p).g3) ? 2 : 3;
}

Rational quadratic_discriminant(const BinaryForm& p) {
  if (p.degree() != 2) throw std::invalid_argument("quadratic_discriminant: form must have degree 2");
  const Rational a0 = p[2], a1 = p[1] / 2, a2 = p[0];
  return a0 * a2 - a1 * a1;
}

int small_l_stratum(const BinaryForm& p) {
  if (p.degree() != 2 && p.degree() != 3) throw std::invalid_argument("small_l_stratum: degree must be 2 or 3");
  if (p.is_zero()) throw ZeroFormError("small_l_stratum: zero form");
  if (p.degree() == 2) return is_zero(quadratic_discriminant(p)) ? 1 : 2;
  return is_linear_power(p) ? 1 : 2;
}

}  // namespace apolar
