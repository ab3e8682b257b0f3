/*
 * Copyright 2026 The homsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "homsim/oracle.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace homsim {

namespace {

constexpr double kResidualThreshold = 1e-8;
constexpr double kConventionTolerance = 1e-12;

using Complex = std::complex<double>;

// <x|y> where x, y are coefficient vectors over the input wavepackets and g
// is their Gram matrix.
double gram_inner(const GramMatrix& g, const std::vector<double>& x,
                  const std::vector<double>& y) {
  double acc = 0.0;
  const std::size_t k = x.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (x[a] == 0.0) continue;
    double row = 0.0;
    for (std::size_t b = 0; b < k; ++b) row += g(a, b) * y[b];
    acc += x[a] * row;
  }
  return acc;
}

double factorial(std::size_t k) {
  static const double table[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  return table[k];
}

// Occupation numbers over the 2 * dim output modes, modes [0, dim) at
// output c and [dim, 2 dim) at output d.
using Monomial = std::vector<std::uint8_t>;
using Polynomial = std::map<Monomial, Complex>;

OutcomeDistribution expand_distribution(const InputState& in,
                                        const BeamSplitter& bs,
                                        BsConvention convention) {
  std::vector<Wavepacket> photons;
  photons.reserve(in.total());
  photons.insert(photons.end(), in.port_a.begin(), in.port_a.end());
  photons.insert(photons.end(), in.port_b.begin(), in.port_b.end());

  const auto vectors = orthonormal_basis(photons);
  const std::size_t dim = vectors.front().coeffs.size();
  const std::size_t modes = 2 * dim;

  const double st = std::sqrt(bs.transmissivity());
  const double sr = std::sqrt(bs.reflectivity());
  Complex a_to_c, a_to_d, b_to_c, b_to_d;
  if (convention == BsConvention::symmetric_i) {
    a_to_c = {st, 0.0};
    a_to_d = {0.0, sr};
    b_to_c = {0.0, sr};
    b_to_d = {st, 0.0};
  } else {
    a_to_c = {st, 0.0};
    a_to_d = {-sr, 0.0};
    b_to_c = {sr, 0.0};
    b_to_d = {st, 0.0};
  }

  // Multiply out one linear form in the output-mode creation operators per
  // photon, collecting like monomials as we go.
  Polynomial poly;
  poly.emplace(Monomial(modes, 0), Complex{1.0, 0.0});
  for (std::size_t k = 0; k < photons.size(); ++k) {
    const bool from_a = k < in.port_a.size();
    const Complex to_c = from_a ? a_to_c : b_to_c;
    const Complex to_d = from_a ? a_to_d : b_to_d;
    Polynomial next;
    for (const auto& [occ, amp] : poly) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double coeff = vectors[k].coeffs[j];
        if (coeff == 0.0) continue;
        Monomial bumped = occ;
        ++bumped[j];
        next[bumped] += amp * to_c * coeff;
        bumped[j] = occ[j];
        ++bumped[dim + j];
        next[bumped] += amp * to_d * coeff;
      }
    }
    poly = std::move(next);
  }

  // A monomial with occupation numbers {k_i} creates a Fock state of
  // squared norm prod k_i!, so that factor converts amplitudes to weights.
  OutcomeDistribution dist;
  dist.total = in.total();
  std::vector<double> weights(dist.total + 1, 0.0);
  double total_weight = 0.0;
  for (const auto& [occ, amp] : poly) {
    double w = std::norm(amp);
    std::size_t at_c = 0;
    for (std::size_t j = 0; j < modes; ++j) {
      w *= factorial(occ[j]);
      if (j < dim) at_c += occ[j];
    }
    weights[at_c] += w;
    total_weight += w;
  }
  dist.raw_probs.resize(dist.total + 1);
  for (std::size_t p = 0; p <= dist.total; ++p) {
    dist.raw_probs[p] = weights[p] / total_weight;
  }
  return dist;
}

}  // namespace

std::vector<ModeVector> orthonormal_basis(const std::vector<Wavepacket>& ws) {
  if (ws.empty()) {
    throw std::invalid_argument("orthonormal_basis: photon list must not be empty");
  }
  const std::size_t k = ws.size();
  const GramMatrix g = gram(ws);

  // Modified Gram-Schmidt carried out in wavepacket coordinates: basis
  // vector e_j is stored as its combination over the input wavepackets, so
  // the Gram matrix supplies every inner product needed.
  std::vector<std::vector<double>> basis;
  std::vector<std::vector<double>> coords(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> u(k, 0.0);
    u[i] = 1.0;
    std::vector<double> r;
    r.reserve(basis.size() + 1);
    for (const auto& e : basis) {
      const double proj = gram_inner(g, e, u);
      r.push_back(proj);
      for (std::size_t l = 0; l < k; ++l) u[l] -= proj * e[l];
    }
    const double residual = std::sqrt(std::max(0.0, gram_inner(g, u, u)));
    if (residual >= kResidualThreshold) {
      for (std::size_t l = 0; l < k; ++l) u[l] /= residual;
      basis.push_back(u);
      r.push_back(residual);
    }
    coords[i] = std::move(r);
  }

  const std::size_t dim = basis.size();
  std::vector<ModeVector> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    coords[i].resize(dim, 0.0);
    double norm2 = 0.0;
    for (double c : coords[i]) norm2 += c * c;
    const double norm = std::sqrt(norm2);
    for (double& c : coords[i]) c /= norm;
    out[i].coeffs = std::move(coords[i]);
  }
  return out;
}

OutcomeDistribution oracle_distribution(const InputState& input,
                                        const BeamSplitter& bs,
                                        BsConvention convention) {
  validate_input(input);
  if (input.total() > kOracleMaxPhotons) {
    throw std::invalid_argument("oracle supports at most 6 photons");
  }
  return expand_distribution(input, bs, convention);
}

OutcomeDistribution oracle_distribution(const InputState& input,
                                        const BeamSplitter& bs) {
  const auto symmetric =
      oracle_distribution(input, bs, BsConvention::symmetric_i);
  const auto real =
      oracle_distribution(input, bs, BsConvention::real_orthogonal);
  for (std::size_t p = 0; p <= symmetric.total; ++p) {
    if (std::abs(symmetric.raw_probs[p] - real.raw_probs[p]) >
        kConventionTolerance) {
      throw std::logic_error(
          "beam-splitter phase conventions disagree; engine invariant broken");
    }
  }
  return symmetric;
}

}  // namespace homsim
