#include <gtest/gtest.h>

#include <set>

#include "kauction/errors.hpp"
#include "kauction/ot.hpp"
#include "kauction/sharing.hpp"

namespace kauction {
namespace {

std::vector<Bytes> random_messages(std::size_t k, std::size_t length, Rng& rng) {
  std::vector<Bytes> out(k, Bytes(length));
  for (auto& m : out) rng.fill(m);
  return out;
}

TEST(OtTest, ToyCodesForFirstBidder) {
  GroupParams params = toy_group_params();
  const std::size_t length = params.scalar_bytes();
  ASSERT_EQ(length, 2u);
  const std::vector<long> codes{3, 5, 10, 21, 40, 90, 180, 360};
  std::vector<Bytes> messages;
  for (long c : codes) {
    Scalar randomized = randomize_code(Scalar(c), Scalar(700), params);
    messages.push_back(to_fixed_bytes(randomized.value, length));
  }
  Rng receiver("receiver");
  Rng sender("sender");
  auto [request, state] = ot_request(3, codes.size(), params, receiver);
  OtResponse response = ot_respond(messages, request, params, sender);
  EXPECT_EQ(from_bytes(ot_recover(response, state, params)), 710);
}

TEST(OtTest, RequestIsRecomputable) {
  GroupParams params = toy_group_params();
  auto [request, state] = ot_request_with_blinding(3, 8, params, Scalar(123));
  GroupElement expected =
      mul_mod(params, pow_mod(params, params.g_ot, Scalar(123)), pow_mod(params, params.h_ot, Scalar(3)));
  EXPECT_EQ(request.y, expected);
  EXPECT_EQ(state.choice, 3u);
}

TEST(OtTest, FreshBlindingDiffers) {
  GroupParams params = toy_group_params();
  Rng rng("fresh");
  auto first = ot_request(3, 8, params, rng);
  auto second = ot_request(3, 8, params, rng);
  EXPECT_NE(first.first.y, second.first.y);
}

TEST(OtTest, ChoiceOutOfRange) {
  GroupParams params = toy_group_params();
  Rng rng("range");
  EXPECT_THROW(ot_request(0, 8, params, rng), ParameterError);
  EXPECT_THROW(ot_request(9, 8, params, rng), ParameterError);
  EXPECT_THROW(ot_request_with_blinding(1, 8, params, Scalar(0)), ParameterError);
}

TEST(OtTest, SingleSlotAlwaysRecovers) {
  GroupParams params = toy_group_params();
  Rng rng("k1");
  for (int trial = 0; trial < 20; ++trial) {
    auto messages = random_messages(1, 2, rng);
    auto [request, state] = ot_request(1, 1, params, rng);
    OtResponse response = ot_respond(messages, request, params, rng);
    ASSERT_EQ(response.pairs.size(), 1u);
    ASSERT_EQ(ot_recover(response, state, params), messages[0]);
  }
}

TEST(OtTest, ResponseReplaysBitExactly) {
  GroupParams params = toy_group_params();
  Rng data("data");
  auto messages = random_messages(8, 2, data);
  auto [request, state] = ot_request_with_blinding(5, 8, params, Scalar(77));
  Rng s1("scripted");
  Rng s2("scripted");
  OtResponse a = ot_respond(messages, request, params, s1);
  OtResponse b = ot_respond(messages, request, params, s2);
  ASSERT_EQ(a.pairs.size(), 8u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(a.pairs[i].u, b.pairs[i].u);
    EXPECT_EQ(a.pairs[i].v, b.pairs[i].v);
    EXPECT_EQ(a.pairs[i].v.size(), 2u);
  }
}

TEST(OtTest, MismatchedLengthsRejected) {
  GroupParams params = toy_group_params();
  Rng rng("lengths");
  auto [request, state] = ot_request(1, 2, params, rng);
  EXPECT_THROW(ot_respond({Bytes(2), Bytes(3)}, request, params, rng), ParameterError);
  EXPECT_THROW(ot_respond({}, request, params, rng), ParameterError);
  EXPECT_THROW(ot_respond({Bytes(2)}, OtRequest{GroupElement(2)}, params, rng), ParameterError);
}

TEST(OtTest, EveryChoiceRecoversItsMessage) {
  GroupParams params = generate_group_params(64, "ot-property");
  Rng rng("ot-loop");
  for (std::size_t k : {1u, 2u, 3u, 8u, 17u, 64u}) {
    for (std::size_t choice = 1; choice <= k; ++choice) {
      auto messages = random_messages(k, params.scalar_bytes(), rng);
      auto [request, state] = ot_request(choice, k, params, rng);
      OtResponse response = ot_respond(messages, request, params, rng);
      ASSERT_EQ(response.pairs.size(), k);
      ASSERT_EQ(ot_recover(response, state, params), messages[choice - 1]) << k << "/" << choice;
    }
  }
}

TEST(OtTest, WrongIndexStateFailsCommitmentCheck) {
  GroupParams params = toy_group_params();
  const std::vector<long> codes{3, 5, 10, 21, 40, 90, 180, 360};
  std::vector<Bytes> messages;
  for (long c : codes) messages.push_back(to_fixed_bytes(BigInt(c + 700) % 751, 2));
  Rng rng("wrong-index");
  int caught = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto [request, state] = ot_request(3, 8, params, rng);
    OtResponse response = ot_respond(messages, request, params, rng);
    OtReceiverState wrong = state;
    wrong.choice = 4;
    Bytes garbage = ot_recover(response, wrong, params);
    Scalar code = params.scalar(from_bytes(garbage));
    GroupElement eta3 = pow_mod(params, params.g_s, Scalar(10));
    GroupElement xi1 = pow_mod(params, params.g_s, Scalar(700));
    if (!verify_received_code(params, eta3, xi1, code)) ++caught;
  }
  // A random 2-octet string lands on the one valid code with probability
  // about 1/65536 per trial.
  EXPECT_EQ(caught, 50);
}

TEST(OtTest, BlindedRequestCoversWholeSubgroup) {
  GroupParams params = toy_group_params();
  std::set<BigInt> seen;
  for (unsigned long a = 1; a < 751; ++a) {
    seen.insert(ot_request_with_blinding(4, 8, params, Scalar(a)).first.y.value);
  }
  // a ranges over Z_q^*, so y covers every subgroup element except h_ot^4.
  EXPECT_EQ(seen.size(), 750u);
  EXPECT_EQ(seen.count(pow_mod(params, params.h_ot, Scalar(4)).value), 0u);
}

}  // namespace
}  // namespace kauction
