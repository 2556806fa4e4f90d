// Copyright 2026 The coirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "config.hpp"

namespace coirank {
namespace {

TEST(RunConfig, DefaultsValidate) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.rank.alpha, 0.40);
  EXPECT_EQ(c.rank.epsilon, 1e-4);
  EXPECT_EQ(c.rank.max_iters, 200);
  EXPECT_EQ(c.rho, 0.62);
  EXPECT_EQ(c.algorithms.size(), 3u);
}

TEST(RunConfig, SetParsesEveryKey) {
  RunConfig c;
  c.set("alpha", "0.3");
  c.set("max-iters", " 50 ");
  c.set("credit-scheme", "Uniform");
  c.set("coic-attribution", "both");
  c.set("coic-classes", "negative_coi, NEGATIVE_SUSPECTED_COI");
  c.set("ri-normalized", "yes");
  c.set("spearman-domain", "full");
  c.set("algo", "cajtrank,pandora,cajtrank");
  c.set("threads", "3");
  c.set("seed", "42");
  c.set("rate", "0.25");
  EXPECT_EQ(c.rank.alpha, 0.3);
  EXPECT_EQ(c.rank.max_iters, 50);
  EXPECT_EQ(c.credit_scheme, CreditScheme::kUniform);
  EXPECT_EQ(c.coic.attribution, CoicAttribution::kBoth);
  EXPECT_EQ(c.coic.classes, (std::array<bool, kCoiClassCount>{false, false, true, false, true}));
  EXPECT_TRUE(c.eval.ri_normalized);
  EXPECT_EQ(c.eval.domain, SpearmanDomain::kFull);
  EXPECT_EQ(c.algorithms, (std::vector<Algorithm>{Algorithm::kCajtRank, Algorithm::kPandora}));
  EXPECT_EQ(c.threads, 3u);
  EXPECT_EQ(c.fixture.seed, 42u);
  EXPECT_EQ(c.fixture.rate, 0.25);
  c.set("coic-classes", "all");
  EXPECT_EQ(c.coic.classes, (std::array<bool, kCoiClassCount>{false, true, true, true, true}));
}

TEST(RunConfig, RejectsBadInput) {
  RunConfig c;
  EXPECT_THROW(c.set("alpha", "lots"), Error);
  EXPECT_THROW(c.set("alpha", "0.1x"), Error);
  EXPECT_THROW(c.set("max-iters", "1.5"), Error);
  EXPECT_THROW(c.set("ri-normalized", "maybe"), Error);
  EXPECT_THROW(c.set("algo", "hits"), Error);
  EXPECT_THROW(c.set("coic-classes", "NORMALISH"), Error);
  EXPECT_THROW(c.set("no-such-key", "1"), Error);
  try {
    c.set("no-such-key", "1");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(RunConfig, ValidateCatchesCrossParameterErrors) {
  RunConfig c;
  c.set("alpha", "0.6");
  EXPECT_THROW(c.validate(), Error);
  c = RunConfig{};
  c.set("rho", "0");
  EXPECT_THROW(c.validate(), Error);
  c = RunConfig{};
  c.set("k-min", "50");
  c.set("k-max", "10");
  EXPECT_THROW(c.validate(), Error);
  c = RunConfig{};
  c.set("rate", "1.5");
  EXPECT_THROW(c.validate(), Error);
}

TEST(RunConfig, JsonCoversEveryKeyAndRoundTrips) {
  RunConfig c;
  c.set("beta", "0.2");
  c.set("algo", "futurerank");
  const auto j = c.to_json();
  RunConfig copy;
  for (const std::string_view key : RunConfig::keys()) {
    ASSERT_TRUE(j.contains(std::string(key))) << key;
    const auto& v = j[std::string(key)];
    copy.set(key, v.is_string() ? v.get<std::string>() : v.dump());
  }
  EXPECT_EQ(copy.to_json(), j);
  EXPECT_EQ(j.size(), RunConfig::keys().size());
}

}  // namespace
}  // namespace coirank
