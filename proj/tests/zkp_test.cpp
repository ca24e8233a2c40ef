#include <gtest/gtest.h>

#include <set>

#include "kauction/errors.hpp"
#include "kauction/sharing.hpp"
#include "kauction/zkp.hpp"

namespace kauction {
namespace {

// p = 23, q = 11: small enough to enumerate every (x, z, c).
GroupParams micro_group() {
  GroupParams params;
  params.p = 23;
  params.q = 11;
  params.mu = 2;
  params.g_s = GroupElement(4);
  params.g_b = GroupElement(9);
  params.g_ot = GroupElement(2);
  params.h_ot = GroupElement(3);
  params.validate();
  return params;
}

EqdlStatement statement_for(const GroupParams& params, const Scalar& x) {
  return {params.g_s, params.g_b, pow_mod(params, params.g_s, x), pow_mod(params, params.g_b, x)};
}

// Special-soundness extractor: x = (r1 - r2) / (c1 - c2) mod q.
Scalar extract_witness(const GroupParams& params, const EqdlProofSession& a,
                       const EqdlProofSession& b) {
  BigInt dr = a.response.value - b.response.value;
  BigInt dc = a.challenge.value - b.challenge.value;
  dc %= params.q;
  if (dc < 0) dc += params.q;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), dc.get_mpz_t(), params.q.get_mpz_t());
  return params.scalar(dr * inv);
}

TEST(ZkpTest, ZeroNonceGivesIdentityCommits) {
  GroupParams params = toy_group_params();
  auto commitment = eqdl_commit_with_nonce(params, statement_for(params, Scalar(7)), Scalar(0));
  EXPECT_EQ(commitment.commit_a.value, 1);
  EXPECT_EQ(commitment.commit_b.value, 1);
}

TEST(ZkpTest, FixedNonceRecomputable) {
  GroupParams params = toy_group_params();
  auto commitment = eqdl_commit_with_nonce(params, statement_for(params, Scalar(7)), Scalar(5));
  EXPECT_EQ(commitment.commit_a, pow_mod(params, params.g_s, Scalar(5)));
  EXPECT_EQ(commitment.commit_b, pow_mod(params, params.g_b, Scalar(5)));
}

TEST(ZkpTest, NoncesAreFresh) {
  GroupParams params = generate_group_params(64, "nonces");
  Rng rng("nonces");
  std::set<BigInt> seen;
  for (int i = 0; i < 1000; ++i) {
    seen.insert(eqdl_commit(params, statement_for(params, Scalar(3)), rng).nonce.value);
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(ZkpTest, RespondArithmetic) {
  GroupParams params = toy_group_params();
  EXPECT_EQ(eqdl_respond(params, Scalar(5), Scalar(7), Scalar(3)).value, 26);
  EXPECT_EQ(eqdl_respond(params, Scalar(5), Scalar(7), Scalar(0)).value, 5);
  EXPECT_THROW(eqdl_respond(params, Scalar(5), Scalar(7), Scalar(751)), ParameterError);
}

TEST(ZkpTest, CompletenessExhaustiveInMicroGroup) {
  GroupParams params = micro_group();
  for (long x = 0; x < 11; ++x) {
    EqdlStatement st = statement_for(params, Scalar(x));
    for (long z = 0; z < 11; ++z) {
      auto commitment = eqdl_commit_with_nonce(params, st, Scalar(z));
      for (long c = 0; c < 11; ++c) {
        Scalar r = eqdl_respond(params, Scalar(z), Scalar(x), Scalar(c));
        ASSERT_TRUE(eqdl_verify(params, st, {commitment.commit_a, commitment.commit_b, Scalar(c), r}))
            << x << " " << z << " " << c;
      }
    }
  }
}

TEST(ZkpTest, RandomCompletenessAndPerturbation) {
  GroupParams params = toy_group_params();
  Rng rng("verify-loop");
  for (int i = 0; i < 100; ++i) {
    Scalar x(rng.uniform_below(params.q));
    EqdlStatement st = statement_for(params, x);
    auto commitment = eqdl_commit(params, st, rng);
    Scalar c(rng.uniform_below(params.q));
    Scalar r = eqdl_respond(params, commitment.nonce, x, c);
    EqdlProofSession session{commitment.commit_a, commitment.commit_b, c, r};
    ASSERT_TRUE(eqdl_verify(params, st, session));
    session.response = add_mod(params, r, Scalar(1));
    ASSERT_FALSE(eqdl_verify(params, st, session));
  }
}

TEST(ZkpTest, MismatchedWitnessRejected) {
  GroupParams params = toy_group_params();
  Rng rng("soundness");
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    Scalar x(rng.uniform_below(params.q));
    Scalar other = add_mod(params, x, Scalar(1 + static_cast<long>(rng.index_below(750))));
    EqdlStatement st{params.g_s, params.g_b, pow_mod(params, params.g_s, x),
                     pow_mod(params, params.g_b, other)};
    auto commitment = eqdl_commit(params, st, rng);
    Scalar c(rng.uniform_nonzero_below(params.q));
    Scalar r = eqdl_respond(params, commitment.nonce, x, c);
    if (!eqdl_verify(params, st, {commitment.commit_a, commitment.commit_b, c, r})) ++rejected;
  }
  EXPECT_EQ(rejected, 100);
}

TEST(ZkpTest, ExtractorRecoversWitness) {
  GroupParams params = toy_group_params();
  Rng rng("extract");
  for (int i = 0; i < 50; ++i) {
    Scalar x(rng.uniform_below(params.q));
    EqdlStatement st = statement_for(params, x);
    auto commitment = eqdl_commit(params, st, rng);
    Scalar c1(rng.uniform_below(params.q));
    Scalar c2 = add_mod(params, c1, Scalar(1 + static_cast<long>(rng.index_below(750))));
    EqdlProofSession s1{commitment.commit_a, commitment.commit_b, c1,
                        eqdl_respond(params, commitment.nonce, x, c1)};
    EqdlProofSession s2{commitment.commit_a, commitment.commit_b, c2,
                        eqdl_respond(params, commitment.nonce, x, c2)};
    ASSERT_TRUE(eqdl_verify(params, st, s1));
    ASSERT_TRUE(eqdl_verify(params, st, s2));
    ASSERT_EQ(extract_witness(params, s1, s2), x);
  }
}

class Proof2Test : public ::testing::Test {
 protected:
  void SetUp() override {
    for (long c : {3, 5, 10, 21, 40, 90, 180, 360}) {
      eta_.push_back(commit(params_, params_.g_s, Scalar(c)));
    }
    for (long s : {290, 535, 294, 26}) {
      sigma_commits_.push_back(commit(params_, params_.g_b, Scalar(s)));
    }
  }

  bool prove(const FlagVector& flags, const Scalar& witness, const std::vector<GroupElement>& sigma) {
    EqdlStatement st = proof2_statement(params_, eta_, sigma, flags);
    auto commitment = eqdl_commit(params_, st, rng_);
    Scalar omega(rng_.uniform_nonzero_below(params_.q));
    Scalar r = eqdl_respond(params_, commitment.nonce, witness, omega);
    return eqdl_verify(params_, st, {commitment.commit_a, commitment.commit_b, omega, r});
  }

  GroupParams params_ = toy_group_params();
  Rng rng_{"proof2"};
  std::vector<GroupElement> eta_;
  std::vector<GroupElement> sigma_commits_;
};

TEST_F(Proof2Test, HonestFlagsVerify) {
  FlagVector flags({1, 0, 1, 1, 0, 0, 0, 1});
  EqdlStatement st = proof2_statement(params_, eta_, sigma_commits_, flags);
  EXPECT_EQ(st.v, pow_mod(params_, params_.g_s, Scalar(394)));
  EXPECT_EQ(st.w, pow_mod(params_, params_.g_b, Scalar(394)));
  EXPECT_TRUE(prove(flags, Scalar(394), sigma_commits_));
}

TEST_F(Proof2Test, InflatedSecondPriceFails) {
  // Seller adds f_7 to claim a 70 second price instead of 40.
  EXPECT_FALSE(prove(FlagVector({1, 0, 1, 1, 0, 0, 1, 1}), Scalar(394), sigma_commits_));
  // Dropping f_4 fails too.
  EXPECT_FALSE(prove(FlagVector({1, 0, 1, 0, 0, 0, 0, 1}), Scalar(394), sigma_commits_));
}

TEST_F(Proof2Test, DegenerateAllZero) {
  std::vector<GroupElement> zero_sigmas(4, GroupElement(1));
  EqdlStatement st = proof2_statement(params_, eta_, zero_sigmas, FlagVector(8));
  EXPECT_EQ(st.v.value, 1);
  EXPECT_EQ(st.w.value, 1);
  EXPECT_TRUE(prove(FlagVector(8), Scalar(0), zero_sigmas));
}

TEST_F(Proof2Test, AcceptanceIffFlagsEncodeSigma) {
  // Over all 256 flag vectors, the proof with witness 394 verifies exactly
  // for the one whose code sum is 394.
  int accepted = 0;
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<int> bits(8);
    long sum = 0;
    const long codes[] = {3, 5, 10, 21, 40, 90, 180, 360};
    for (int i = 0; i < 8; ++i) {
      bits[i] = mask >> i & 1;
      sum += bits[i] * codes[i];
    }
    bool ok = prove(FlagVector(bits), Scalar(394), sigma_commits_);
    ASSERT_EQ(ok, sum % 751 == 394) << mask;
    accepted += ok;
  }
  EXPECT_EQ(accepted, 1);
}

}  // namespace
}  // namespace kauction
