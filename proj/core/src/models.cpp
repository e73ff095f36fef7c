#include "tangles/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangles/error.hpp"
#include "tangles/random.hpp"

namespace tangles {

std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kBadParams, "need at least one group");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

std::vector<int> balanced_labels(std::size_t n, std::size_t k) {
  std::vector<int> labels;
  labels.reserve(n);
  const auto sizes = balanced_sizes(n, k);
  for (std::size_t g = 0; g < k; ++g) labels.insert(labels.end(), sizes[g], static_cast<int>(g));
  return labels;
}

MindsetInstance gen_mindsets(std::size_t n, std::size_t m, std::size_t k, double p,
                             std::uint64_t seed) {
  if (k < 1 || k > n || m < 1 || !(p >= 0.0 && p < 0.5)) {
    throw Error(ErrorCode::kBadParams, "mindsets need 1 <= k <= n, m >= 1 and 0 <= p < 0.5");
  }
  MindsetInstance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  inst.p = p;
  inst.seed = seed;
  inst.mindsets = BinaryMatrix(k, m);
  Rng coin(derive_seed(seed, SeedStream::kMindsets));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      inst.mindsets.set(i, j, static_cast<std::uint8_t>(coin.next() >> 63));
    }
  }
  inst.labels = balanced_labels(n, k);
  inst.answers = BinaryMatrix(n, m);
  Rng noise(derive_seed(seed, SeedStream::kAnswers));
  for (std::size_t v = 0; v < n; ++v) {
    const auto group = static_cast<std::size_t>(inst.labels[v]);
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint8_t truth = inst.mindsets.at(group, j);
      inst.answers.set(v, j, noise.bernoulli(p) ? static_cast<std::uint8_t>(1 - truth) : truth);
    }
  }
  return inst;
}

bool check_nondegeneracy(const BinaryMatrix& mindsets, std::size_t limit) {
  const std::size_t k = mindsets.rows();
  const std::size_t m = mindsets.cols();
  if (m > limit || m > 30) {
    throw Error(ErrorCode::kTooLarge, "non-degeneracy scan over " + std::to_string(m) +
                                          " questions exceeds the limit of " +
                                          std::to_string(limit));
  }
  // A vector tau that is not a mindset fails the triple test iff some set of
  // at most three questions meets every D_i = {j : tau_j != mu_i(j)}. Picking
  // one question per D_i always works when k <= 3.
  if (k <= 3) return true;
  std::vector<std::uint32_t> mu(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) mu[i] |= static_cast<std::uint32_t>(mindsets.at(i, j)) << j;
  }
  std::vector<std::uint32_t> diff(k);
  for (std::uint32_t tau = 0; tau < (std::uint32_t{1} << m); ++tau) {
    bool is_mindset = false;
    for (std::size_t i = 0; i < k; ++i) {
      diff[i] = tau ^ mu[i];
      if (diff[i] == 0) is_mindset = true;
    }
    if (is_mindset) continue;
    bool hit = false;
    for (std::size_t x = 0; x < m && !hit; ++x) {
      for (std::size_t y = x; y < m && !hit; ++y) {
        const std::uint32_t xy = (std::uint32_t{1} << x) | (std::uint32_t{1} << y);
        std::uint32_t common = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
        for (std::size_t i = 0; i < k; ++i) {
          if ((diff[i] & xy) == 0) common &= diff[i];
        }
        hit = common != 0;
      }
    }
    if (!hit) return false;
  }
  return true;
}

double nondegeneracy_probability_bound(std::size_t m, std::size_t k) {
  const double kd = static_cast<double>(k);
  const double beta = static_cast<double>(m) / (kd * std::pow(2.0, kd));
  return 1.0 - std::pow(2.0, (1.0 - beta) * kd);
}

SbmInstance gen_sbm(std::size_t n, std::size_t blocks, double p, double q, std::uint64_t seed,
                    bool expected_mode) {
  if (blocks < 1 || blocks > n || !(q >= 0.0 && q < p && p <= 1.0)) {
    throw Error(ErrorCode::kBadParams, "block model needs 1 <= blocks <= n and 0 <= q < p <= 1");
  }
  SbmInstance inst;
  inst.n = n;
  inst.blocks = blocks;
  inst.p = p;
  inst.q = q;
  inst.seed = seed;
  inst.expected_mode = expected_mode;
  inst.labels = balanced_labels(n, blocks);
  std::vector<Edge> edges;
  Rng rng(derive_seed(seed, SeedStream::kModel));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double prob = inst.labels[u] == inst.labels[v] ? p : q;
      if (expected_mode) {
        if (prob > 0.0) edges.push_back({u, v, prob});
      } else if (rng.bernoulli(prob)) {
        edges.push_back({u, v, 1.0});
      }
    }
  }
  inst.graph = Graph(n, std::move(edges));
  return inst;
}

GmmInstance gen_gmm(std::vector<double> centers, std::size_t dims, double sigma, std::size_t n,
                    std::uint64_t seed) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || dims == 0 || centers.empty() ||
      centers.size() % dims != 0) {
    throw Error(ErrorCode::kBadParams,
                "mixture needs sigma > 0 and a non-empty k x dims center matrix");
  }
  GmmInstance inst;
  inst.k = centers.size() / dims;
  inst.dims = dims;
  inst.sigma = sigma;
  inst.seed = seed;
  inst.labels = balanced_labels(n, inst.k);
  std::vector<double> coords(n * dims);
  Rng rng(derive_seed(seed, SeedStream::kModel));
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = static_cast<std::size_t>(inst.labels[v]);
    for (std::size_t j = 0; j < dims; ++j) {
      coords[v * dims + j] = centers[c * dims + j] + sigma * rng.normal();
    }
  }
  inst.centers = std::move(centers);
  inst.points = PointCloud(n, dims, std::move(coords));
  return inst;
}

double expected_sbm_cut_cost(double alpha1, double alpha2, double n, double p, double q) {
  return n * n / 4.0 *
         (p * (alpha1 - alpha1 * alpha1 + alpha2 - alpha2 * alpha2) +
          q * (alpha1 + alpha2 - 2.0 * alpha1 * alpha2));
}

MindsetBounds thm1_bounds(double n, double m, double k, double p, double a) {
  MindsetBounds out;
  const double missing_gap = k * a / n - 1.0 + 3.0 * p;
  const double spurious_gap = a / n - p;
  out.prob_missing = k * m * std::exp(-2.0 * n * missing_gap * missing_gap / (9.0 * k));
  out.prob_spurious = k * m * std::exp(-2.0 * n * spurious_gap * spurious_gap / k);
  out.valid = p < 1.0 / (k + 3.0) && p * n < a && a < (1.0 - 3.0 * p) * n / k;
  return out;
}

PsiRange thm2_psi_range(double n, double p, double q, double a) {
  PsiRange out;
  out.lower = q * (n / 2.0) * (n / 2.0);
  const double xi = 1.0 + q / p;
  const double x = 2.0 * a / n;
  const double third = (xi - x) / 3.0;
  out.upper = n * n / 4.0 * p * (xi * (xi - x) / 3.0 - third * third);
  out.non_identifiable = p < 2.0 * q;
  const bool gates = a >= 2.0 && n > 2.0 * a && p > 3.0 * q * n / (n - 2.0 * a);
  out.admissible = gates && out.lower < out.upper;
  return out;
}

GaussAgreementRange thm_gauss_agreement_range(const std::vector<double>& mu,
                                              const std::vector<double>& nu, double sigma,
                                              double n) {
  if (mu.size() != nu.size() || mu.empty()) {
    throw Error(ErrorCode::kLengthMismatch, "centers must have the same non-zero dimension");
  }
  if (!(sigma > 0.0)) throw Error(ErrorCode::kBadParams, "sigma must be positive");
  GaussAgreementRange out;
  out.a_max_existence = n / 12.0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const double d = std::abs(mu[j] - nu[j]);
    if (d > out.separation) {
      out.separation = d;
      out.axis = j;
    }
  }
  out.no_separation = !(out.separation > 2.0 * sigma);
  out.q = (1.0 + std::erf(-out.separation / (2.0 * std::sqrt(2.0) * sigma))) / 2.0;
  out.a_min_uniqueness = n * (0.42 * out.q + 0.06);
  out.a_min_uniqueness_tight = n * (0.42 * out.q + 0.056);
  return out;
}

}  // namespace tangles
