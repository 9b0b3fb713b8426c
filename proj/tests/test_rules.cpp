#include "tlmine/rules.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace tlmine;
using namespace tlmine::test;

TEST_CASE("confidence is an exact ratio")
{
    CHECK(confidence(2, 2) == Ratio(1, 1));
    CHECK(confidence(4, 6) == Ratio(2, 3));
    CHECK(confidence(0, 5) == Ratio(0, 1));
    CHECK_THROWS_AS(confidence(0, 0), Error);
    CHECK_THROWS_AS(confidence(3, 2), Error);
}

TEST_CASE("format_percent")
{
    CHECK(format_percent(Ratio(7, 9)) == "77.78%");
    CHECK(format_percent(Ratio(5, 8)) == "62.5%");
    CHECK(format_percent(Ratio(1, 1)) == "100%");
    CHECK(format_percent(Ratio(5, 7)) == "71.43%");
    CHECK(format_percent(Ratio(2, 3)) == "66.67%");
    CHECK(format_percent(Ratio(3, 5)) == "60%");
    CHECK(format_percent(Ratio(4, 5)) == "80%");
    CHECK(format_percent(Ratio(0, 1)) == "0%");
    CHECK(format_percent(Ratio(1, 20)) == "5%");
    CHECK(format_percent(Ratio(1, 1000)) == "0.1%");
    CHECK(format_percent(Ratio(1, 8000)) == "0.01%");
    CHECK(format_percent(Ratio(1, 40000)) == "0%");
    // 0.005% is exactly half a hundredth: rounds away from zero.
    CHECK(format_percent(Ratio(1, 20000)) == "0.01%");
}

TEST_CASE("basket rules at minconf 0.7")
{
    Database db = basket();
    TradeList tl = TradeList::build(db);
    MineResult r = mine(tl, SupportThreshold::absolute(2));
    auto rules = generate_rules(r, {Ratio::parse("0.7")});
    REQUIRE(rules.size() == 6);

    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> got;
    for (const auto& rule : rules) {
        got.emplace_back(db.labels_of(rule.antecedent), db.labels_of(rule.consequent));
        CHECK(rule.confidence == Ratio(1, 1));
        CHECK(format_percent(rule.confidence) == "100%");
    }
    using V = std::vector<std::string>;
    CHECK(got == std::vector<std::pair<V, V>>{{{"I5"}, {"I1"}},
                                               {{"I5"}, {"I2"}},
                                               {{"I4"}, {"I2"}},
                                               {{"I5"}, {"I1", "I2"}},
                                               {{"I1", "I5"}, {"I2"}},
                                               {{"I2", "I5"}, {"I1"}}});
    CHECK(rules[3].support == 2);
}

TEST_CASE("confidence boundaries compare exactly")
{
    TradeList tl = TradeList::build(basket());
    MineResult r = mine(tl, SupportThreshold::absolute(2));
    auto at = [&](std::string_view minconf) { return generate_rules(r, {Ratio::parse(minconf)}).size(); };

    // I1->I2, I1->I3, I3->I1 and I3->I2 sit at exactly 2/3.
    std::size_t at_two_thirds = generate_rules(r, {Ratio(2, 3)}).size();
    CHECK(at("0.6666") == at_two_thirds);
    CHECK(at("0.6667") < at_two_thirds);
    CHECK(at("100%") == 6);
    CHECK(at("1") == 6);
    CHECK_THROWS_AS(generate_rules(r, {Ratio(0, 1)}), ThresholdError);
    CHECK_THROWS_AS(generate_rules(r, {Ratio(3, 2)}), ThresholdError);
}

TEST_CASE("minconf 1 keeps exactly the implications")
{
    Database db = basket();
    TradeList tl = TradeList::build(db);
    MineResult r = mine(tl, SupportThreshold::absolute(2));
    for (const auto& rule : generate_rules(r, {Ratio(1, 1)})) {
        TidSet x = tl.tidset_of(rule.antecedent);
        TidSet y = tl.tidset_of(rule.consequent);
        CHECK(std::includes(y.begin(), y.end(), x.begin(), x.end()));
    }
}

TEST_CASE("generate_rules rejects incomplete frequent sets")
{
    MineResult broken = make_result({{Itemset{0}, 3}, {Itemset{0, 1}, 2}}, 2);
    CHECK_THROWS_AS(generate_rules(broken, {Ratio(1, 2)}), Error);
}

TEST_CASE("rule properties on random databases")
{
    std::mt19937_64 rng(99);
    const Ratio epsilon(1, 1000000);
    for (int iter = 0; iter < 200; ++iter) {
        Database db = random_database(rng);
        TradeList tl = TradeList::build(db);
        for (Count k = 1; k <= 3; ++k) {
            MineResult r = mine(tl, SupportThreshold::absolute(k));
            auto all = generate_rules(r, {epsilon});

            std::size_t expected = 0;
            for (const auto& f : r.flatten())
                if (f.itemset.size() >= 2)
                    expected += (std::size_t{1} << f.itemset.size()) - 2;
            REQUIRE(all.size() == expected);

            std::map<std::pair<Itemset, Itemset>, Ratio> conf_of;
            for (const auto& rule : all) {
                // Recomputed from raw counts.
                std::vector<ItemId> z(rule.antecedent.begin(), rule.antecedent.end());
                z.insert(z.end(), rule.consequent.begin(), rule.consequent.end());
                Itemset zs = Itemset::from_unsorted(z);
                CHECK(zs.size() == rule.antecedent.size() + rule.consequent.size());
                CHECK(rule.support == scan_support(db, zs));
                CHECK(rule.confidence == Ratio(scan_support(db, zs), scan_support(db, rule.antecedent)));
                CHECK(rule.confidence > Ratio(0, 1));
                CHECK(rule.confidence <= Ratio(1, 1));
                conf_of[{rule.antecedent, zs}] = rule.confidence;
            }

            // Shrinking the antecedent within the same Z never raises confidence.
            for (const auto& [key, conf] : conf_of) {
                const auto& [x, z] = key;
                for (const auto& [key2, conf2] : conf_of) {
                    const auto& [x2, z2] = key2;
                    if (z2 == z && x2.size() < x.size() && x2.subset_of(x))
                        CHECK(conf >= conf2);
                }
            }

            // Filtering is exact at every distinct confidence value.
            for (const auto& [key, conf] : conf_of) {
                auto kept = generate_rules(r, {conf});
                std::size_t expected_kept = 0;
                for (const auto& [k2, c2] : conf_of)
                    if (c2 >= conf)
                        ++expected_kept;
                CHECK(kept.size() == expected_kept);
            }
        }
    }
}
