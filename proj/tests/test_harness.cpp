#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subadd/errors.hpp"
#include "subadd/harness.hpp"
#include "subadd/products.hpp"

using namespace subadd;

TEST(Seeds, StableAndDistinct) {
  EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
  EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
  EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
}

TEST(Rng, BoundedDraws) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    int x = rng.between(-2, 3);
    ASSERT_GE(x, -2);
    ASSERT_LE(x, 3);
  }
  std::vector<int> perm = rng.permutation(6);
  std::sort(perm.begin(), perm.end());
  EXPECT_EQ(perm, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(rng.bernoulli(Rational(0)));
  EXPECT_TRUE(rng.bernoulli(Rational(1)));
}

TEST(RandomGraph, ExtremesAndDeterminism) {
  EXPECT_EQ(random_graph(5, Rational(0), 3), empty(5));
  EXPECT_EQ(random_graph(5, Rational(1), 3), complete(5));
  EXPECT_EQ(random_graph(8, Rational(1, 2), 99), random_graph(8, Rational(1, 2), 99));
  EXPECT_THROW(random_graph(3, Rational(3, 2), 1), InvalidInput);
  EXPECT_THROW(random_graph(3, Rational(-1), 1), InvalidInput);
}

TEST(RandomPoset, AlwaysHeightTwo) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) ASSERT_TRUE(random_height_two_poset(rng.between(1, 6), rng).height_two());
}

TEST(InequalityNames, RoundTrip) {
  EXPECT_EQ(all_inequalities().size(), 12u);
  for (Inequality id : all_inequalities()) EXPECT_EQ(parse_inequality(to_string(id)), id);
  EXPECT_THROW(parse_inequality("boxicity"), InvalidInput);
}

TEST(Campaign, InducedMatchingAtDefaultScale) {
  TrialConfig cfg;
  cfg.id = Inequality::im;
  cfg.trials = 200;
  cfg.seed = 7;
  TrialReport r = verify_subadditivity(cfg);
  EXPECT_EQ(r.verdict(), Verdict::pass);
  EXPECT_EQ(r.passes, 200);
  EXPECT_EQ(r.passes + r.fails + r.skips, static_cast<int>(r.records.size()));
}

TEST(Campaign, SingleVertexFactorsPassTrivially) {
  for (Inequality id : all_inequalities()) {
    TrialConfig cfg;
    cfg.id = id;
    cfg.trials = 10;
    cfg.max_factor = cfg.max_third = 1;
    // Single-vertex pricing instances are edgeless, so even the forward
    // revenue clause holds there.
    EXPECT_EQ(verify_subadditivity(cfg).verdict(), Verdict::pass) << to_string(id);
  }
}

TEST(Campaign, CorruptedDecompositionIsCaught) {
  for (Inequality id : {Inequality::im, Inequality::sim}) {
    TrialConfig cfg;
    cfg.id = id;
    cfg.trials = 30;
    cfg.seed = 7;
    cfg.fault = DecompositionFault::drop_edge;
    TrialReport r = verify_subadditivity(cfg);
    ASSERT_EQ(r.verdict(), Verdict::fail);
    const TrialRecord* bad = nullptr;
    for (const TrialRecord& rec : r.records) {
      if (rec.outcome.verdict == Verdict::fail) {
        bad = &rec;
        break;
      }
    }
    ASSERT_NE(bad, nullptr);
    EXPECT_NE(bad->outcome.note.find("|M| > |M1| + |M2|"), std::string::npos);
    // The stored inputs reproduce the failure.
    CheckOutcome again = run_check(id, bad->inputs, cfg.caps, cfg.fault);
    EXPECT_EQ(again.verdict, Verdict::fail);
    EXPECT_EQ(again.note, bad->outcome.note);
    EXPECT_EQ(again.certificates, bad->outcome.certificates);
    EXPECT_EQ(run_check(id, bad->inputs).verdict, Verdict::pass);
  }
}

TEST(Campaign, TrialsReplayExactly) {
  for (Inequality id : all_inequalities()) {
    TrialConfig cfg;
    cfg.id = id;
    cfg.trials = 6;
    cfg.seed = 123;
    cfg.max_factor = 3;
    cfg.max_third = 2;
    TrialReport full = verify_subadditivity(cfg);
    cfg.only_trial = 4;
    TrialReport one = verify_subadditivity(cfg);
    ASSERT_EQ(one.records.size(), 1u);
    EXPECT_EQ(one.records[0].inputs, full.records[4].inputs) << to_string(id);
    EXPECT_EQ(one.records[0].outcome.lhs, full.records[4].outcome.lhs);
    CheckOutcome again = run_check(id, full.records[4].inputs, cfg.caps);
    EXPECT_EQ(again.lhs, full.records[4].outcome.lhs);
    EXPECT_EQ(again.rhs, full.records[4].outcome.rhs);
    EXPECT_EQ(again.certificates, full.records[4].outcome.certificates);
  }
}

TEST(Campaign, CapsTurnIntoCountedSkips) {
  TrialConfig cfg;
  cfg.id = Inequality::im;
  cfg.trials = 20;
  cfg.caps.im = 1;
  TrialReport r = verify_subadditivity(cfg);
  EXPECT_GT(r.skips, 0);
  EXPECT_EQ(r.passes + r.fails + r.skips, 20);
  EXPECT_TRUE(r.excessive_skips());
  EXPECT_EQ(r.verdict(), Verdict::pass);
  for (const TrialRecord& rec : r.records) {
    if (rec.outcome.verdict == Verdict::skip) {
      EXPECT_FALSE(rec.outcome.note.empty());
    }
  }
}

TEST(Campaign, BadConfigsAreRejected) {
  TrialConfig cfg;
  cfg.trials = -1;
  EXPECT_THROW(verify_subadditivity(cfg), InvalidInput);
  cfg.trials = 3;
  cfg.only_trial = 3;
  EXPECT_THROW(verify_subadditivity(cfg), InvalidInput);
  cfg.only_trial.reset();
  cfg.max_factor = 0;
  EXPECT_THROW(verify_subadditivity(cfg), InvalidInput);
}

TEST(Campaign, ReportJson) {
  TrialConfig cfg;
  cfg.id = Inequality::alpha_mult;
  cfg.trials = 3;
  Json j = verify_subadditivity(cfg).to_json();
  EXPECT_EQ(j["type"], "trial-report");
  EXPECT_EQ(j["inequality"], "alpha-mult");
  EXPECT_EQ(j["records"].size(), 3u);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_TRUE(j["records"][0].contains("inputs"));
  EXPECT_TRUE(j["records"][0].contains("certificates"));
}

TEST(Checks, SpecificInstances) {
  Graph c5 = cycle(5), k2 = complete(2), p3 = path(3);
  EXPECT_EQ(check_im(c5, k2, k2).verdict, Verdict::pass);
  EXPECT_EQ(check_sim(p3, k2, k2, TotalOrder::identity(12)).verdict, Verdict::pass);
  EXPECT_EQ(check_dim(k2, p3, chain(2)).verdict, Verdict::pass);
  EXPECT_EQ(check_alpha_mult(c5, c5).verdict, Verdict::pass);
  EXPECT_EQ(check_chi_power(c5, 2).verdict, Verdict::pass);
  EXPECT_EQ(check_elbassioni(c5).verdict, Verdict::pass);
  EXPECT_EQ(check_sim_upper(c5).verdict, Verdict::pass);
  EXPECT_EQ(check_hj_bridge(complete(3)).verdict, Verdict::pass);
  std::vector<Edge> e = {{0, 0}, {1, 0}, {1, 1}};
  Bipartite b = make_bipartite(2, 2, e);
  EXPECT_EQ(check_mrfs(b, Rational(1)).verdict, Verdict::pass);
  EXPECT_EQ(check_dcl(b).verdict, Verdict::pass);
  EXPECT_EQ(check_mes(MesInstance{3, {{0}, {0, 1}, {2}}}).verdict, Verdict::pass);
  EXPECT_EQ(check_pricing(empty(2), empty(1)).verdict, Verdict::pass);
}

TEST(Checks, PricingReportsTheForwardGap) {
  CheckOutcome o = check_pricing(complete(2), empty(1));
  EXPECT_EQ(o.verdict, Verdict::fail);
  EXPECT_NE(o.note.find("forward revenue 2 != |M| = 1"), std::string::npos);
  EXPECT_EQ(o.note.find("below"), std::string::npos);
}

TEST(Amplify, EdgeInMatchingMode) {
  AmplifyReport r = amplify_report(complete(2), 2, AmplifyMode::matching);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.rows[0]["alpha"], 1);
  EXPECT_EQ(r.rows[1]["alpha"], 1);
  EXPECT_EQ(r.rows[0]["im_bip_e"], 1);
  EXPECT_GE(r.rows[1]["im_bip_e"].get<int>(), 1);
}

TEST(Amplify, FiveCycleInMatchingMode) {
  AmplifyReport r = amplify_report(cycle(5), 2, AmplifyMode::matching);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.rows[0]["alpha"], 2);
  EXPECT_EQ(r.rows[1]["alpha"], 4);
  EXPECT_LE(r.rows[1]["sim_bip"].get<int>(), 2 * r.rows[0]["sim_bip"].get<int>());
}

TEST(Amplify, EdgeInDimensionMode) {
  AmplifyReport r = amplify_report(complete(2), 2, AmplifyMode::dimension);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.rows[1]["claim_bound"], 10);
  EXPECT_LE(r.rows[1]["constructed_dim"].get<int>(), 10);
  EXPECT_TRUE(r.rows[1]["constructed_verified"].get<bool>());
}

TEST(Amplify, TruncatesAtTheFoldCap) {
  AmplifyReport r = amplify_report(cycle(5), 3, AmplifyMode::matching, {}, 30);
  EXPECT_EQ(r.rows.size(), 2u);
  ASSERT_TRUE(r.truncated);
  EXPECT_NE(r.truncated->find("k=3"), std::string::npos);
  EXPECT_TRUE(r.to_json().contains("truncated"));
  EXPECT_THROW(amplify_report(cycle(5), 0, AmplifyMode::matching), InvalidInput);
  EXPECT_EQ(parse_amplify_mode("dimension"), AmplifyMode::dimension);
  EXPECT_THROW(parse_amplify_mode("both"), InvalidInput);
}
