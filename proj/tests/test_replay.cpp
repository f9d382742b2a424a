#include <gtest/gtest.h>

#include <json.hpp>

#include "forge/fixtures.hpp"
#include "forge/replay.hpp"

using namespace forge;

TEST(Replay, SectionsAreStable) {
  EXPECT_EQ(replay::sections(),
            (std::vector<std::string>{"ex2.4", "ex2.5", "thm3.2", "lem3.3", "sec4", "prop5.5", "thm6.3",
                                      "thm7.1", "thm7.3-deg5", "sec8"}));
}

TEST(Replay, UnknownSection) {
  EXPECT_THROW(replay::run("sec9"), Error);
  EXPECT_THROW(replay::run_all({"ex2.4", "nope"}, false), Error);
}

TEST(Replay, Deterministic) {
  std::vector<std::string> names{"ex2.4", "lem3.3", "prop5.5", "sec8"};
  auto a = replay::format_text(replay::run_all(names, false));
  auto b = replay::format_text(replay::run_all(names, true));
  auto c = replay::format_text(replay::run_all(names, false));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Replay, JsonShape) {
  auto j = nlohmann::json::parse(replay::format_json(replay::run_all({"ex2.4"}, false)));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["section"], "ex2.4");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_FALSE(j[0]["claims"].empty());
}

TEST(Replay, TextEndsWithVerdict) {
  auto text = replay::format_text(replay::run_all({"ex2.4"}, false));
  EXPECT_NE(text.find("ex2.4: PASS\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 14), "\nreplay: PASS\n");
}

TEST(Fixtures, EveryFileParses) {
  for (const char* stem : {"dialgebra", "leibniz", "lie_triple", "lts", "jordan"}) {
    EXPECT_NO_THROW(fixtures::document(stem)) << stem;
  }
  EXPECT_THROW(fixtures::document("missing"), Error);
  EXPECT_THROW(fixtures::text("golden/none.txt"), Error);
  EXPECT_EQ(fixtures::operator_identities().size(), 4u);
}
