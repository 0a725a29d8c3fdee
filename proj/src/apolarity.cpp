#include "apolar/apolarity.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace apolar {

namespace {

void require_nonzero(const BinaryForm& p, const char* what) {
  if (p.is_zero()) throw ZeroFormError(std::string(what) + ": zero form");
}

RationalMatrix catalecticant_matrix(const BinaryForm& p, int d) {
  const int l = p.degree();
  RationalMatrix m(static_cast<std::size_t>(l - d + 1), static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const BinaryForm image = apolar_apply(BinaryForm::monomial(j, d - j), p);
    for (int r = 0; r <= l - d; ++r) m(r, j) = image[r];
  }
  return m;
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& basis) {
  return solve_membership(v, basis).has_value();
}

}  // namespace

Catalecticant catalecticant(const BinaryForm& p, int d) {
  require_nonzero(p, "catalecticant");
  if (d < 0 || d > p.degree())
    throw std::out_of_range("catalecticant: degree " + std::to_string(d) + " outside [0, " +
                            std::to_string(p.degree()) + "]");
  return {d, p.degree() - d, catalecticant_matrix(p, d)};
}

std::vector<BinaryForm> apolar_kernel(const BinaryForm& p, int d) {
  require_nonzero(p, "apolar_kernel");
  if (d < 0) throw std::out_of_range("apolar_kernel: negative degree");
  std::vector<BinaryForm> out;
  if (d > p.degree()) {
    for (int j = 0; j <= d; ++j) out.push_back(BinaryForm::monomial(j, d - j));
    return out;
  }
  for (auto& v : kernel_basis(catalecticant_matrix(p, d))) out.emplace_back(std::move(v));
  return out;
}

int ann_dim(const BinaryForm& p, int d) {
  const Catalecticant c = catalecticant(p, d);
  return static_cast<int>(c.matrix.cols() - rank(c.matrix));
}

int ann_dim_closed_form(int l, int d1, int d2, int d) {
  if (d2 <= d && d <= l) return 2 * d - l;
  if (d1 <= d && d < d2) return d + 1 - d1;
  return 0;
}

int cactus_from_waring(int l, int waring) {
  return 2 * waring <= l + 2 ? waring : l + 2 - waring;
}

std::vector<RationalVector> multiples_in_degree(const BinaryForm& g, int d) {
  std::vector<RationalVector> out;
  const int shift = d - g.degree();
  for (int j = 0; j <= shift; ++j) out.push_back(multiply(BinaryForm::monomial(j, shift - j), g).coeffs());
  return out;
}

std::vector<RationalVector> ideal_in_degree(const BinaryForm& g1, const BinaryForm& g2, int d) {
  auto out = multiples_in_degree(g1, d);
  auto more = multiples_in_degree(g2, d);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

ApolarProfile sylvester_generators(const BinaryForm& p) {
  require_nonzero(p, "sylvester_generators");
  const int l = p.degree();

  // Ann(P)_{l+1} is everything, so the search stops by then.
  int d1 = 1;
  std::vector<BinaryForm> low = apolar_kernel(p, d1);
  while (low.empty()) low = apolar_kernel(p, ++d1);
  const int d2 = l + 2 - d1;

  ApolarProfile profile{l, d1, d2, BinaryForm(d1), BinaryForm(d2), 0, d1, d1 == d2, std::nullopt};

  if (d1 < d2) {
    assert(low.size() == 1);
    profile.g1 = normalize(low.front());
    const auto multiples = multiples_in_degree(profile.g1, d2);
    for (const auto& candidate : apolar_kernel(p, d2)) {
      if (!in_span(candidate.coeffs(), multiples)) {
        profile.g2 = normalize(candidate);
        break;
      }
    }
    if (is_squarefree(profile.g1)) profile.squarefree_witness = profile.g1;
  } else {
    assert(low.size() == 2);
    profile.g1 = normalize(low[0]);
    profile.g2 = normalize(low[1]);
    // Pencil search: the discriminant of g1 + t g2 is a polynomial in t of
    // degree at most 2(d1-1), so d1*d2 + 1 samples cannot all be roots.
    if (is_squarefree(profile.g1)) {
      profile.squarefree_witness = profile.g1;
    } else if (is_squarefree(profile.g2)) {
      profile.squarefree_witness = profile.g2;
    } else {
      for (int t = 1; t <= d1 * d2 + 1; ++t) {
        BinaryForm candidate = profile.g1 + profile.g2 * Rational(t);
        if (is_squarefree(candidate)) {
          profile.squarefree_witness = normalize(candidate);
          break;
        }
      }
    }
  }
  profile.waring_rank = profile.squarefree_witness ? d1 : d2;

#ifndef NDEBUG
  for (int d = 0; d <= l; ++d) assert(ann_dim(p, d) == ann_dim_closed_form(l, d1, d2, d));
  assert(profile.cactus_rank == cactus_from_waring(l, profile.waring_rank));
#endif
  return profile;
}

int waring_rank(const BinaryForm& p) { return sylvester_generators(p).waring_rank; }

int cactus_rank(const BinaryForm& p) { return sylvester_generators(p).cactus_rank; }

}  // namespace apolar
