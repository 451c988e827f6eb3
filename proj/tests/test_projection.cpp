#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "hausp/oracle.hpp"
#include "hausp/projection.hpp"
#include "test_support.hpp"

using namespace hausp;
using namespace hausp::testing;

TEST(SeqArray, FlattensFirstExampleSequence) {
  Database db = example_db();
  SeqArray sa = build_seq_array(db.sequences()[0]);
  ASSERT_EQ(sa.size(), 9u);
  EXPECT_EQ(sa.sid, 1);
  const std::vector<Item> items = {a, c, a, b, e, c, d, e, f};
  const std::vector<Utility> util = {4, 32, 2, 4, 30, 4, 3, 6, 5};
  const std::vector<std::uint32_t> sind = {1, 1, 2, 2, 2, 3, 3, 4, 4};
  Utility rest = 90;
  for (std::uint32_t k = 1; k <= 9; ++k) {
    const auto& e = sa.at(k);
    rest -= e.utility;
    EXPECT_EQ(e.ind, k);
    EXPECT_EQ(e.item, items[k - 1]);
    EXPECT_EQ(e.utility, util[k - 1]);
    EXPECT_EQ(e.sind, sind[k - 1]);
    EXPECT_EQ(e.ru, rest);
  }
  EXPECT_EQ(sa.itemset_end, (std::vector<std::uint32_t>{0, 2, 5, 7, 9}));
  ASSERT_NE(sa.head.find(a), nullptr);
  EXPECT_EQ(*sa.head.find(a), (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(sa.head.find(g), nullptr);
}

TEST(Projection, RootEnumeratesAllItems) {
  Database db = example_db();
  ProjectedDB root = project_root(db);
  EXPECT_TRUE(root.is_root());
  EXPECT_FALSE(root.empty());
  ExtensionItems it = enumerate_extension_items(root);
  EXPECT_TRUE(it.ilist.empty());
  EXPECT_EQ(it.slist, db.items());
  EXPECT_THROW(extend_projection(root, a, ExtensionMode::i_extension), std::invalid_argument);
}

TEST(Projection, SingleItemLists) {
  Database db = example_db();
  ProjectedDB pa = extend_projection(project_root(db), a, ExtensionMode::s_extension);
  ASSERT_EQ(pa.lists().size(), 3u);
  EXPECT_EQ(pa.lists()[0].entries, (std::vector<ExtensionEntry>{{4, 1, 8}, {2, 3, 6}}));
  EXPECT_EQ(pa.lists()[1].entries, (std::vector<ExtensionEntry>{{2, 1, 8}, {2, 5, 4}}));
  EXPECT_EQ(pa.lists()[2].entries, (std::vector<ExtensionEntry>{{2, 1, 8}}));
  EXPECT_EQ(pa.aclen(), 1u);
  EXPECT_EQ(pa.average_utility(), Ratio(8));
}

TEST(Projection, SExtensionKeepsBestAcu) {
  Database db = example_db();
  ProjectedDB ae = extend_projection(extend_projection(project_root(db), a, ExtensionMode::s_extension), e,
                                     ExtensionMode::s_extension);
  ASSERT_EQ(ae.lists().size(), 2u);  // QS2 has no e
  EXPECT_EQ(ae.lists()[0].sid, 1);
  EXPECT_EQ(ae.lists()[0].entries, (std::vector<ExtensionEntry>{{34, 5, 4}, {10, 8, 1}}));
  EXPECT_EQ(ae.lists()[1].entries, (std::vector<ExtensionEntry>{{38, 8, 1}}));
  EXPECT_EQ(ae.average_utility(), Ratio(36));
}

TEST(Projection, SecondSequenceEntriesForBThenD) {
  Database db = example_db();
  ProjectedDB bd = extend_projection(extend_projection(project_root(db), b, ExtensionMode::s_extension), d,
                                     ExtensionMode::s_extension);
  ASSERT_EQ(bd.lists().size(), 3u);
  ASSERT_EQ(bd.lists()[1].sid, 2);
  EXPECT_EQ(bd.lists()[1].entries, (std::vector<ExtensionEntry>{{11, 6, 3}, {5, 9, 0}}));
}

TEST(Projection, RemainingUtility) {
  Database db = example_db();
  ProjectedDB bf = extend_projection(extend_projection(project_root(db), b, ExtensionMode::s_extension), f,
                                     ExtensionMode::i_extension);
  ASSERT_EQ(bf.lists().size(), 1u);
  EXPECT_EQ(bf.lists()[0].sid, 2);
  EXPECT_EQ(remaining_utility(bf, bf.lists()[0], bf.lists()[0].entries.front()), 20);
}

TEST(Projection, IExtensionItemMustFollowLast) {
  Database db = example_db();
  ProjectedDB pc = extend_projection(project_root(db), c, ExtensionMode::s_extension);
  EXPECT_THROW(extend_projection(pc, a, ExtensionMode::i_extension), std::invalid_argument);
  EXPECT_TRUE(extend_projection(pc, 99, ExtensionMode::s_extension).empty());
}

TEST(Projection, DumpIsOneLinePerEntry) {
  Database db = example_db();
  ProjectedDB pa = extend_projection(project_root(db), a, ExtensionMode::s_extension);
  std::string dump = dump_extension_lists(pa);
  EXPECT_EQ(std::count(dump.begin(), dump.end(), '\n'), 5);
  EXPECT_NE(dump.find("1 1 4 8"), std::string::npos);
}

// Property: every projection agrees with instance enumeration on the raw sequences.
TEST(Property, ProjectionMatchesInstances) {
  std::mt19937_64 rng(303);
  for (int round = 0; round < 80; ++round) {
    Database db = random_db(rng);
    std::set<Pattern> seen;
    for_each_node(db, 4, [&](const ProjectedDB&, const ProjectedDB& node) {
      const Pattern& s = node.pattern();
      seen.insert(s);
      ASSERT_EQ(node.average_utility(), naive_au(s, db)) << s.str();
      std::size_t li = 0;
      for (const auto& qs : db.sequences()) {
        auto inst = find_instances(s, qs);
        if (inst.empty()) continue;
        ASSERT_LT(li, node.lists().size());
        const auto& list = node.lists()[li++];
        ASSERT_EQ(list.sid, qs.sid);
        const SeqArray& sa = node.array(list);
        // acu at each end occurrence = best instance utility ending there.
        std::map<std::uint32_t, Utility> want;
        for (const auto& pos : inst) {
          std::uint32_t end = sa.itemset_end[pos.back() - 1] + 1;
          while (sa.at(end).item != s.last_item()) ++end;
          Utility u = instance_utility(s, pos, qs);
          want[end] = std::max(want.count(end) ? want[end] : u, u);
        }
        ASSERT_EQ(list.entries.size(), want.size());
        std::size_t k = 0;
        for (const auto& [ind, u] : want) {
          const auto& en = list.entries[k++];
          EXPECT_EQ(en.exind, ind);
          EXPECT_EQ(en.acu, u);
          EXPECT_EQ(en.rlen, sa.size() - ind);
          EXPECT_EQ(remaining_utility(node, list, en), sa.at(ind).ru);
        }
      }
      ASSERT_EQ(li, node.lists().size());
    });
    // The walk reaches exactly the patterns that occur.
    std::set<Pattern> all;
    for (const Pattern& s : enumerate_patterns(db, 4)) all.insert(s);
    ASSERT_EQ(seen, all);
  }
}
