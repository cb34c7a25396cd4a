#include "cliffcalc/repr.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cliffcalc {

namespace {

// diag(a, +-b) as one matrix of twice the order.
ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int half = a.dim();
  ComplexMatrix out(2 * half);
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < half; ++j) {
      out.at(i, j) = a.at(i, j);
      out.at(half + i, half + j) = b.at(i, j);
    }
  }
  return out;
}

// [[0, 1], [1, 0]] in identity blocks.
ComplexMatrix off_diag_identity(int dim) {
  const int half = dim / 2;
  ComplexMatrix out(dim);
  for (int i = 0; i < half; ++i) {
    out.at(i, half + i) = Complex{1.0, 0.0};
    out.at(half + i, i) = Complex{1.0, 0.0};
  }
  return out;
}

Complex i_power(int k) {
  static const Complex table[4] = {
      Complex{1.0, 0.0}, Complex{0.0, 1.0}, Complex{-1.0, 0.0}, Complex{0.0, -1.0}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

Representation build_generators(const Signature& sig) {
  const int n = sig.n();
  if (n < 1) {
    throw std::invalid_argument("build_generators: need n >= 1, got " + sig.str());
  }

  // Euclidean chain Cl(cur,0), grown from the 2x2 base cases.
  std::vector<ComplexMatrix> gens;
  ComplexMatrix g1(2);
  g1.at(0, 0) = Complex{1.0, 0.0};
  g1.at(1, 1) = Complex{-1.0, 0.0};
  gens.push_back(g1);
  if (n >= 2) gens.push_back(off_diag_identity(2));

  int cur = int(gens.size());
  while (cur < n) {
    if (cur % 2 == 0) {
      // Cl(2k,0) -> Cl(2k+1,0): diag(g, -g) per generator, plus the
      // i^k gamma^1..gamma^2k volume element in the same block shape.
      const int k = cur / 2;
      ComplexMatrix volume = ComplexMatrix::identity(gens[0].dim());
      for (const auto& g : gens) volume = volume * g;
      volume = mat_scale(i_power(k), volume);
      std::vector<ComplexMatrix> next;
      next.reserve(gens.size() + 1);
      for (const auto& g : gens) next.push_back(block_diag(g, -g));
      next.push_back(block_diag(volume, -volume));
      gens = std::move(next);
    } else {
      // Cl(2k+1,0) -> Cl(2k+2,0): keep everything, append [[0,1],[1,0]].
      gens.push_back(off_diag_identity(gens[0].dim()));
    }
    ++cur;
  }

  // Other signatures reuse the Euclidean matrices, generators past p times i.
  for (int a = sig.p; a < n; ++a) gens[a] = mat_scale(Complex{0.0, 1.0}, gens[a]);

  return Representation{sig, std::move(gens)};
}

std::vector<ComplexMatrix> blade_matrices(const Signature& sig,
                                          std::span<const ComplexMatrix> generators) {
  if (int(generators.size()) != sig.n()) {
    throw std::invalid_argument("blade_matrices: expected " + std::to_string(sig.n()) +
                                " generators, got " + std::to_string(generators.size()));
  }
  const int order = generators.empty() ? 1 : generators[0].dim();
  std::vector<ComplexMatrix> table;
  table.reserve(sig.coeff_count());
  table.push_back(ComplexMatrix::identity(order));
  for (BladeMask mask = 1; mask < BladeMask(sig.coeff_count()); ++mask) {
    const int lowest = std::countr_zero(mask);
    table.push_back(generators[lowest] * table[mask & (mask - 1)]);
  }
  return table;
}

ComplexMatrix represent(const Multivector& u, std::span<const ComplexMatrix> generators) {
  const auto table = blade_matrices(u.sig, generators);
  ComplexMatrix out(table[0].dim());
  for (BladeMask mask = 0; mask < BladeMask(u.coeffs.size()); ++mask) {
    const Complex c = u.coeffs[mask];
    if (c == Complex{}) continue;
    const auto& bm = table[mask];
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
      out.entries()[i] += c * bm.entries()[i];
    }
  }
  return out;
}

ComplexMatrix represent(const Multivector& u) {
  if (u.sig.n() == 0) {
    ComplexMatrix out(1);
    out.at(0, 0) = u.coeffs[0];
    return out;
  }
  const Representation rep = build_generators(u.sig);
  return represent(u, rep.generators);
}

std::vector<ComplexMatrix> conjugated_generators(const Representation& rep,
                                                 const ComplexMatrix& transform, bool negate) {
  if (negate && rep.sig.n() % 2 == 0) {
    throw std::invalid_argument("conjugated_generators: the negated family exists for odd n only");
  }
  const ComplexMatrix inv = mat_inverse(transform);
  std::vector<ComplexMatrix> betas;
  betas.reserve(rep.generators.size());
  for (const auto& g : rep.generators) {
    ComplexMatrix beta = inv * g * transform;
    if (negate) beta = -beta;
    betas.push_back(std::move(beta));
  }
  return betas;
}

ComplexMatrix random_invertible_matrix(int dim, std::uint64_t seed) {
  for (std::uint64_t attempt = seed;; ++attempt) {
    SplitMix64 rng{mix_seed(attempt, 0x7472616e73ull)};
    ComplexMatrix t(dim);
    for (auto& e : t.entries()) e = rng.next_in_unit_disc();
    if (std::abs(mat_det(t)) >= 1e-3) return t;
  }
}

std::vector<ComplexMatrix> alternate_representation(const Signature& sig, std::uint64_t seed,
                                                    bool negate) {
  if (sig.n() == 0) {
    if (negate) {
      throw std::invalid_argument("alternate_representation: the negated family exists for odd n only");
    }
    return {};
  }
  const Representation rep = build_generators(sig);
  const ComplexMatrix t = random_invertible_matrix(sig.matrix_order(), seed);
  return conjugated_generators(rep, t, negate);
}

}  // namespace cliffcalc
