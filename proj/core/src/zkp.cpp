#include "kauction/zkp.hpp"

#include "kauction/errors.hpp"
#include "kauction/sharing.hpp"

namespace kauction {

EqdlCommitment eqdl_commit_with_nonce(const GroupParams& params, const EqdlStatement& statement,
                                      const Scalar& z) {
  return EqdlCommitment{pow_mod(params, statement.g1, z), pow_mod(params, statement.g2, z), z};
}

EqdlCommitment eqdl_commit(const GroupParams& params, const EqdlStatement& statement, Rng& rng) {
  return eqdl_commit_with_nonce(params, statement, Scalar(rng.uniform_nonzero_below(params.q)));
}

Scalar eqdl_respond(const GroupParams& params, const Scalar& z, const Scalar& x,
                    const Scalar& challenge) {
  if (!params.is_scalar(challenge.value)) throw ParameterError("eqdl_respond: challenge >= q");
  return params.scalar(z.value + challenge.value * x.value);
}

bool eqdl_verify(const GroupParams& params, const EqdlStatement& statement,
                 const EqdlProofSession& session) {
  if (!params.is_scalar(session.response.value) || !params.is_scalar(session.challenge.value)) {
    return false;
  }
  GroupElement lhs1 = pow_mod(params, statement.g1, session.response);
  GroupElement rhs1 = mul_mod(params, session.commit_a, pow_mod(params, statement.v, session.challenge));
  GroupElement lhs2 = pow_mod(params, statement.g2, session.response);
  GroupElement rhs2 = mul_mod(params, session.commit_b, pow_mod(params, statement.w, session.challenge));
  return lhs1 == rhs1 && lhs2 == rhs2;
}

EqdlStatement proof2_statement(const GroupParams& params, const std::vector<GroupElement>& eta,
                               const std::vector<GroupElement>& sigma_commits,
                               const FlagVector& flags) {
  if (flags.size() != eta.size()) throw ParameterError("proof2_statement: length mismatch");
  std::vector<GroupElement> selected;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (flags.test(i)) selected.push_back(eta[i]);
  }
  return EqdlStatement{params.g_s, params.g_b, product(params, selected),
                       product(params, sigma_commits)};
}

}  // namespace kauction
