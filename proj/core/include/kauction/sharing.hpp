#ifndef KAUCTION_SHARING_HPP_
#define KAUCTION_SHARING_HPP_

#include <vector>

#include "kauction/group.hpp"

namespace kauction {

// r_1..r_n, each non-zero, summing to 0 mod q.
class RandomizerSet {
 public:
  // Throws ParameterError on n < 2, a zero entry, an entry outside
  // [0, q), or a non-zero sum.
  RandomizerSet(std::vector<Scalar> r, const GroupParams& params);

  std::size_t size() const { return r_.size(); }
  const Scalar& at(std::size_t j) const { return r_.at(j); }  // 0-based
  const std::vector<Scalar>& values() const { return r_; }

 private:
  std::vector<Scalar> r_;
};

// First n-1 uniform non-zero; the last is minus their sum, re-drawn while
// that would be zero. Throws ParameterError for n < 2.
RandomizerSet generate_randomizers(std::size_t n, const GroupParams& params, Rng& rng);

// `count` non-zero scalars summing to `target` mod q. Used when a tie
// forces fresh randomizers for a subset of bidders. count >= 2.
std::vector<Scalar> generate_randomizers_summing_to(std::size_t count, const Scalar& target,
                                                    const GroupParams& params, Rng& rng);

// (c + r) mod q.
Scalar randomize_code(const Scalar& code, const Scalar& r, const GroupParams& params);

// n-1 uniform shares, the last closing the sum to `secret` mod q.
std::vector<Scalar> split_additive(const Scalar& secret, std::size_t n, const GroupParams& params,
                                   Rng& rng);

Scalar column_sum(const std::vector<Scalar>& shares, const GroupParams& params);

// Row j holds bidder j's split of its randomized code.
struct ShareMatrix {
  std::vector<std::vector<Scalar>> d;

  Scalar row_sum(std::size_t j, const GroupParams& params) const;
  Scalar column(std::size_t v, const GroupParams& params) const;
};

struct AdditiveShareSums {
  std::vector<Scalar> sigma;
  Scalar sigma_k;
};

// sigma_j = sum over rows of column j; sigma_k = sum of the sigma_j.
AdditiveShareSums share_sums(const ShareMatrix& matrix, const GroupParams& params);

// Every public commitment of the malicious-mode protocol.
struct CommitmentBundle {
  std::vector<GroupElement> eta;                    // g_s^c_i, k entries
  std::vector<GroupElement> xi;                     // g_s^r_j, n entries
  std::vector<GroupElement> zeta;                   // g_b^c'_j, n entries
  std::vector<std::vector<GroupElement>> share_commits;  // g_b^d_jv, n x n
  std::vector<GroupElement> sigma_commits;          // g_b^sigma_j, n entries
  std::vector<GroupElement> shuffled_code_commits;  // g_b^c_i, random order
  std::vector<GroupElement> rand_commits;           // g_b^r_j
  std::vector<GroupElement> neg_rand_commits;       // g_b^-r_j
};

// g^x mod p.
GroupElement commit(const GroupParams& params, const GroupElement& g, const Scalar& x);

// eta_i * xi_j == g_s^code.
bool verify_received_code(const GroupParams& params, const GroupElement& eta_i,
                          const GroupElement& xi_j, const Scalar& code);

// zeta_j * g_b^-r_j is one of the shuffled g_b^c_i.
bool verify_zeta_membership(const GroupParams& params, const GroupElement& zeta_j,
                            const GroupElement& neg_rand_j,
                            const std::vector<GroupElement>& shuffled_code_commits);

// g_b^d == published_commit.
bool verify_share(const GroupParams& params, const Scalar& d, const GroupElement& published_commit);

// Product of bidder j's share commitments equals zeta_j.
bool verify_row(const GroupParams& params, const std::vector<GroupElement>& share_commits_row,
                const GroupElement& zeta_j, std::size_t n);

// g_b^sigma_j == sigma_commit_j and sigma_commit_j == product of the
// column's share commitments.
bool verify_sigma(const GroupParams& params, const Scalar& sigma_j,
                  const GroupElement& sigma_commit_j,
                  const std::vector<GroupElement>& column_commits);

// Product of all elements mod p (1 for an empty list).
GroupElement product(const GroupParams& params, const std::vector<GroupElement>& elements);

}  // namespace kauction

#endif  // KAUCTION_SHARING_HPP_
