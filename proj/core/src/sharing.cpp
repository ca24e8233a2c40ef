#include "kauction/sharing.hpp"

#include <algorithm>

#include "kauction/errors.hpp"

namespace kauction {

RandomizerSet::RandomizerSet(std::vector<Scalar> r, const GroupParams& params) : r_(std::move(r)) {
  if (r_.size() < 2) throw ParameterError("randomizer set needs n >= 2");
  BigInt sum = 0;
  for (const auto& x : r_) {
    if (!params.is_scalar(x.value)) throw ParameterError("randomizer outside [0, q)");
    if (x.value == 0) throw ParameterError("randomizer must be non-zero");
    sum += x.value;
  }
  if (params.scalar(sum).value != 0) throw ParameterError("randomizers must sum to 0 mod q");
}

std::vector<Scalar> generate_randomizers_summing_to(std::size_t count, const Scalar& target,
                                                    const GroupParams& params, Rng& rng) {
  if (count < 2) throw ParameterError("randomizers: need at least two entries");
  while (true) {
    std::vector<Scalar> r;
    r.reserve(count);
    BigInt partial = 0;
    for (std::size_t j = 0; j + 1 < count; ++j) {
      r.emplace_back(rng.uniform_nonzero_below(params.q));
      partial += r.back().value;
    }
    Scalar last = params.scalar(target.value - partial);
    if (last.value == 0) continue;
    r.push_back(last);
    return r;
  }
}

RandomizerSet generate_randomizers(std::size_t n, const GroupParams& params, Rng& rng) {
  if (n < 2) throw ParameterError("generate_randomizers: n must be at least 2");
  return RandomizerSet(generate_randomizers_summing_to(n, Scalar(0), params, rng), params);
}

Scalar randomize_code(const Scalar& code, const Scalar& r, const GroupParams& params) {
  return add_mod(params, code, r);
}

std::vector<Scalar> split_additive(const Scalar& secret, std::size_t n, const GroupParams& params,
                                   Rng& rng) {
  if (n < 1) throw ParameterError("split_additive: n must be positive");
  std::vector<Scalar> shares;
  shares.reserve(n);
  BigInt partial = 0;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    shares.emplace_back(rng.uniform_below(params.q));
    partial += shares.back().value;
  }
  shares.push_back(params.scalar(secret.value - partial));
  return shares;
}

Scalar column_sum(const std::vector<Scalar>& shares, const GroupParams& params) {
  BigInt sum = 0;
  for (const auto& s : shares) sum += s.value;
  return params.scalar(sum);
}

Scalar ShareMatrix::row_sum(std::size_t j, const GroupParams& params) const {
  return column_sum(d.at(j), params);
}

Scalar ShareMatrix::column(std::size_t v, const GroupParams& params) const {
  std::vector<Scalar> col;
  col.reserve(d.size());
  for (const auto& row : d) col.push_back(row.at(v));
  return column_sum(col, params);
}

AdditiveShareSums share_sums(const ShareMatrix& matrix, const GroupParams& params) {
  AdditiveShareSums sums;
  for (std::size_t v = 0; v < matrix.d.size(); ++v) sums.sigma.push_back(matrix.column(v, params));
  sums.sigma_k = column_sum(sums.sigma, params);
  return sums;
}

GroupElement commit(const GroupParams& params, const GroupElement& g, const Scalar& x) {
  return pow_mod(params, g, x);
}

GroupElement product(const GroupParams& params, const std::vector<GroupElement>& elements) {
  GroupElement acc(1);
  for (const auto& e : elements) acc = mul_mod(params, acc, e);
  return acc;
}

bool verify_received_code(const GroupParams& params, const GroupElement& eta_i,
                          const GroupElement& xi_j, const Scalar& code) {
  if (!params.is_scalar(code.value)) return false;
  return mul_mod(params, eta_i, xi_j) == commit(params, params.g_s, code);
}

bool verify_zeta_membership(const GroupParams& params, const GroupElement& zeta_j,
                            const GroupElement& neg_rand_j,
                            const std::vector<GroupElement>& shuffled_code_commits) {
  GroupElement unmasked = mul_mod(params, zeta_j, neg_rand_j);
  return std::find(shuffled_code_commits.begin(), shuffled_code_commits.end(), unmasked) !=
         shuffled_code_commits.end();
}

bool verify_share(const GroupParams& params, const Scalar& d, const GroupElement& published_commit) {
  if (!params.is_scalar(d.value)) return false;
  return commit(params, params.g_b, d) == published_commit;
}

bool verify_row(const GroupParams& params, const std::vector<GroupElement>& share_commits_row,
                const GroupElement& zeta_j, std::size_t n) {
  if (share_commits_row.size() != n) return false;
  return product(params, share_commits_row) == zeta_j;
}

bool verify_sigma(const GroupParams& params, const Scalar& sigma_j,
                  const GroupElement& sigma_commit_j,
                  const std::vector<GroupElement>& column_commits) {
  if (!params.is_scalar(sigma_j.value)) return false;
  return commit(params, params.g_b, sigma_j) == sigma_commit_j &&
         product(params, column_commits) == sigma_commit_j;
}

}  // namespace kauction
