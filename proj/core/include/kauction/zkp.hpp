#ifndef KAUCTION_ZKP_HPP_
#define KAUCTION_ZKP_HPP_

#include <vector>

#include "kauction/group.hpp"
#include "kauction/knapsack.hpp"

namespace kauction {

// Interactive proof that log_g1(v) == log_g2(w).
//
//   prover   -> verifier : A = g1^z, B = g2^z
//   verifier -> prover   : challenge c
//   prover   -> verifier : r = z + c*x mod q
//   verifier checks        g1^r == A * v^c  and  g2^r == B * w^c

struct EqdlStatement {
  GroupElement g1;
  GroupElement g2;
  GroupElement v;  // g1^x
  GroupElement w;  // g2^x
};

struct EqdlProofSession {
  GroupElement commit_a;
  GroupElement commit_b;
  Scalar challenge;
  Scalar response;
};

struct EqdlCommitment {
  GroupElement commit_a;
  GroupElement commit_b;
  Scalar nonce;  // prover-only
};

EqdlCommitment eqdl_commit(const GroupParams& params, const EqdlStatement& statement, Rng& rng);
EqdlCommitment eqdl_commit_with_nonce(const GroupParams& params, const EqdlStatement& statement,
                                      const Scalar& z);

// (z + challenge * x) mod q. Throws ParameterError if challenge >= q.
Scalar eqdl_respond(const GroupParams& params, const Scalar& z, const Scalar& x,
                    const Scalar& challenge);

bool eqdl_verify(const GroupParams& params, const EqdlStatement& statement,
                 const EqdlProofSession& session);

// Statement binding the seller's announced flags to the bidders' sigma
// commitments: v = prod eta_i^f_i under g_s, w = prod g_b^sigma_j under g_b.
// The witness is sigma_k; the proof verifies iff sum c_i f_i == sigma_k.
EqdlStatement proof2_statement(const GroupParams& params, const std::vector<GroupElement>& eta,
                               const std::vector<GroupElement>& sigma_commits,
                               const FlagVector& flags);

}  // namespace kauction

#endif  // KAUCTION_ZKP_HPP_
