#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tangles/bitvec.hpp"
#include "tangles/data.hpp"

namespace tangles {

// Group sizes for n objects split into k groups as evenly as possible; the
// first n % k groups get one extra member.
std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t k);
// Contiguous labels matching balanced_sizes.
std::vector<int> balanced_labels(std::size_t n, std::size_t k);

struct MindsetInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  // k x m ground truth answer vectors.
  BinaryMatrix mindsets;
  BinaryMatrix answers;
  std::vector<int> labels;
};

// Mindset entries are fair coin flips; each person copies its group's mindset
// and flips every answer independently with probability p. p = 0 is accepted
// for noiseless instances. Throws kBadParams unless 1 <= k <= n, m >= 1 and
// 0 <= p < 0.5.
MindsetInstance gen_mindsets(std::size_t n, std::size_t m, std::size_t k, double p,
                             std::uint64_t seed);

// True iff no answer vector other than the mindsets agrees, on every triple
// of questions, with some mindset. Throws kTooLarge when m > limit.
bool check_nondegeneracy(const BinaryMatrix& mindsets, std::size_t limit = 22);

// Lower bound 1 - 2^((1 - beta) k), beta = m / (k 2^k), on the probability
// that random mindsets are non-degenerate.
double nondegeneracy_probability_bound(std::size_t m, std::size_t k);

struct SbmInstance {
  std::size_t n = 0;
  std::size_t blocks = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  bool expected_mode = false;
  Graph graph;
  std::vector<int> labels;
};

// Contiguous balanced blocks. Sampled mode draws unit edges with probability
// p inside and q across blocks; expected mode is the complete graph with
// weights p and q (zero weights omitted). Throws kBadParams unless
// 0 <= q < p <= 1 and 1 <= blocks <= n.
SbmInstance gen_sbm(std::size_t n, std::size_t blocks, double p, double q,
                    std::uint64_t seed, bool expected_mode);

struct GmmInstance {
  // k x d, row-major.
  std::vector<double> centers;
  std::size_t k = 0;
  std::size_t dims = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  PointCloud points;
  std::vector<int> labels;
};

// Balanced labels; each point is its center plus sigma * N(0, I). Throws
// kBadParams unless sigma > 0, k >= 1 and centers.size() == k * dims.
GmmInstance gen_gmm(std::vector<double> centers, std::size_t dims, double sigma,
                    std::size_t n, std::uint64_t seed);

// Expected cost of a cut holding fractions alpha1, alpha2 of the two blocks
// of an n-node two-block model:
// (n^2 / 4) (p (a1 - a1^2 + a2 - a2^2) + q (a1 + a2 - 2 a1 a2)).
double expected_sbm_cut_cost(double alpha1, double alpha2, double n, double p, double q);

struct MindsetBounds {
  // Bound on the probability that some mindset is not a tangle.
  double prob_missing = 0.0;
  // Bound on the probability of a tangle that is not a mindset.
  double prob_spurious = 0.0;
  // p < 1 / (k + 3) and p n < a < (1 - 3p) n / k.
  bool valid = false;

  double total() const noexcept { return prob_missing + prob_spurious; }
};

// prob_missing = k m exp(-2n (k a / n - 1 + 3p)^2 / (9k))
// prob_spurious = k m exp(-2n (a / n - p)^2 / k)
// The supporting lemmas state the same exponents as
// -2n ((k a/n - 1 + 3p)/3)^2 / k and -2 (a/n - p)^2 n / k.
MindsetBounds thm1_bounds(double n, double m, double k, double p, double a);

struct PsiRange {
  double lower = 0.0;
  double upper = 0.0;
  // a >= 2, p > 3 q n / (n - 2a) and lower < upper.
  bool admissible = false;
  // p < 2q: at most one tangle exists for any order.
  bool non_identifiable = false;
};

// Order window in which the two blocks of the expected two-block model are
// exactly the tangles of all cuts: q (n/2)^2 <= psi < (n^2/4) p
// (xi (xi - 2a/n) / 3 - ((xi - 2a/n) / 3)^2), xi = 1 + q / p.
PsiRange thm2_psi_range(double n, double p, double q, double a);

struct GaussAgreementRange {
  // Two tangles exist for a < a_max_existence = n / 12.
  double a_max_existence = 0.0;
  // Every tangle points to a center for a > a_min_uniqueness.
  double a_min_uniqueness = 0.0;
  // Same bound with the constant 0.056 derived in the proof.
  double a_min_uniqueness_tight = 0.0;
  double q = 0.0;
  double separation = 0.0;
  std::size_t axis = 0;
  // No axis has |mu_j - nu_j| > 2 sigma.
  bool no_separation = true;
};

// Uses the axis with the largest |mu_j - nu_j| = d:
// q = (1 + erf(-d / (2 sqrt(2) sigma))) / 2, a_min = n (0.42 q + 0.06).
GaussAgreementRange thm_gauss_agreement_range(const std::vector<double>& mu,
                                              const std::vector<double>& nu,
                                              double sigma, double n);

}  // namespace tangles
