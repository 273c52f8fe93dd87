#include <gtest/gtest.h>

#include <random>

#include "nondec/encodings.hpp"
#include "nondec/errors.hpp"
#include "nondec/spaces.hpp"
#include "oracles.hpp"

using namespace nondec;

TEST(GraphParse, Triangle) {
  Graph g = parse_graph("a,b b,c c,a", false);
  EXPECT_EQ(g.vertices, (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_TRUE(g.has_edge("a", "c"));
  EXPECT_TRUE(g.has_edge("c", "a"));
}

TEST(GraphParse, EmptyString) {
  Graph g = parse_graph("", false);
  EXPECT_TRUE(g.vertices.empty());
  EXPECT_TRUE(g.edges.empty());
}

TEST(GraphParse, MalformedInputs) {
  EXPECT_THROW(parse_graph("a,a", false), MalformedInput);
  EXPECT_THROW(parse_graph("a,b a,b", false), MalformedInput);
  EXPECT_THROW(parse_graph("a,b b,a", false), MalformedInput);
  EXPECT_THROW(parse_graph("a,b ", false), MalformedInput);
  EXPECT_THROW(parse_graph(" a,b", false), MalformedInput);
  EXPECT_THROW(parse_graph("a,,b", false), MalformedInput);
  EXPECT_THROW(parse_graph("A,b", false), MalformedInput);
  EXPECT_THROW(parse_graph("a,b,c", false), MalformedInput);
  EXPECT_NO_THROW(parse_graph("a,b b,a", true));
}

TEST(GraphParse, MalformedReportsPosition) {
  try {
    parse_graph("a,b c,c", false);
    FAIL();
  } catch (const MalformedInput& e) {
    EXPECT_GE(e.position(), 4u);
  }
}

TEST(GraphEncode, SortedTokens) {
  Graph g = parse_graph("b,c c,a a,b", false);
  EXPECT_EQ(encode_graph(g), "a,b a,c b,c");
  EXPECT_EQ(encode_graph(parse_graph("", false)), "");
  EXPECT_NE(encode_graph(parse_graph("b,a", false)).find("a,b"), std::string::npos);
}

TEST(GraphEncode, RoundTripOverSpaces) {
  for (bool directed : {false, true}) {
    for (const auto& w : all_graphs(directed ? 3 : 4, directed)) {
      Graph g = parse_graph(w, directed);
      EXPECT_EQ(encode_graph(g), w);
      EXPECT_EQ(parse_graph(encode_graph(g), directed), g);
    }
  }
}

TEST(GraphEncode, NonCanonicalTextReencodesToSameGraph) {
  for (const std::string t : {"c,b a", "d b,a c,b", "z,y x", "b,a a,c"}) {
    Graph g = parse_graph(t, false);
    std::string e = encode_graph(g);
    EXPECT_EQ(parse_graph(e, false), g) << t;
  }
}

TEST(Cnf, ParseExamples) {
  CnfFormula f = parse_cnf("x,!y y,z");
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.variables, (std::set<std::string>{"x", "y", "z"}));
  EXPECT_EQ(f.clauses[0], (Clause{{"x", true}, {"y", false}}));
  EXPECT_EQ(f.clauses[1], (Clause{{"y", true}, {"z", true}}));

  CnfFormula g = parse_cnf("x !x");
  ASSERT_EQ(g.clauses.size(), 2u);
  EXPECT_EQ(g.clauses[0], (Clause{{"x", true}}));
  EXPECT_EQ(g.clauses[1], (Clause{{"x", false}}));

  EXPECT_THROW(parse_cnf("x,,y"), MalformedInput);
  EXPECT_THROW(parse_cnf("x "), MalformedInput);
  EXPECT_THROW(parse_cnf("!"), MalformedInput);
  EXPECT_EQ(parse_cnf("").clauses.size(), 0u);
}

TEST(Cnf, DuplicateLiteralsCollapse) {
  CnfFormula f = parse_cnf("x,x,!y");
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0].size(), 2u);
  EXPECT_EQ(encode_cnf(f), "x,!y");
}

TEST(Cnf, RoundTripOverSpace) {
  for (const auto& w : all_cnfs(2, 2)) {
    EXPECT_EQ(encode_cnf(parse_cnf(w)), w);
  }
}

TEST(Assignment, Encoding) {
  EXPECT_EQ(encode_assignment({{"x", true}, {"y", true}, {"z", true}}, {"x", "y", "z"}),
            "x=1 y=1 z=1");
  EXPECT_EQ(encode_assignment({}, {}), "");
  EXPECT_EQ(encode_assignment({{"y", false}, {"x", true}}, {"x", "y"}), "x=1 y=0");
  EXPECT_THROW(encode_assignment({{"x", true}}, {"x", "y"}), MissingVariable);
}

TEST(Assignment, ParseIsExact) {
  std::set<std::string> vars{"x", "y"};
  EXPECT_TRUE(parse_assignment("x=1 y=0", vars));
  EXPECT_FALSE(parse_assignment("y=0 x=1", vars));
  EXPECT_FALSE(parse_assignment("x=1", vars));
  EXPECT_FALSE(parse_assignment("x=1 y=2", vars));
  EXPECT_FALSE(parse_assignment("x=1  y=0", vars));
}

TEST(Natural, RoundTrip) {
  EXPECT_EQ(Natural::parse("35").to_string(), "35");
  EXPECT_EQ(Natural::parse("0").to_string(), "0");
  EXPECT_FALSE(Natural::try_parse("035"));
  EXPECT_FALSE(Natural::try_parse(""));
  EXPECT_FALSE(Natural::try_parse("-1"));
  std::string big = "123456789012345678901234567890";
  EXPECT_EQ(Natural::parse(big).to_string(), big);
  EXPECT_FALSE(Natural::parse(big).to_u64());
  for (std::uint64_t m = 0; m <= 2000; ++m) {
    EXPECT_EQ(Natural::parse(std::to_string(m)).to_u64(), m);
  }
}

TEST(CanonicalCycle, Examples) {
  std::vector<std::string> bca{"b", "c", "a"}, acb{"a", "c", "b"}, ba{"b", "a"};
  EXPECT_EQ(canonical_cycle(bca, false), "a,b,c");
  EXPECT_EQ(canonical_cycle(acb, false), "a,b,c");
  EXPECT_EQ(canonical_cycle(ba, true), "a,b");
  EXPECT_EQ(canonical_cycle(acb, true), "a,c,b");
  std::vector<std::string> dup{"a", "b", "a"};
  EXPECT_THROW(canonical_cycle(dup, false), DuplicateVertex);
}

// Every rotation and reflection of every Hamilton cycle of every graph on up
// to 6 vertices canonicalizes to one string, which matches the test oracle.
TEST(CanonicalCycle, AllVariantsAgree) {
  for (std::size_t n = 3; n <= 6; ++n) {
    // The complete graph contains every cycle on its vertices.
    std::string complete;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!complete.empty()) complete += ' ';
        complete += vertex_name(i) + "," + vertex_name(j);
      }
    }
    for (const auto& c : oracle::hamilton_cycles(complete, false)) {
      auto seq = oracle::split(c, ',');
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < n; ++r) {
          std::vector<std::string> rot(seq.begin() + static_cast<long>(r), seq.end());
          rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
          EXPECT_EQ(canonical_cycle(rot, false), c);
        }
        std::reverse(seq.begin(), seq.end());
      }
    }
  }
}

TEST(Totality, ParsersNeverCrash) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> byte(32, 126);
  const std::string grammar_chars = "ab,! =01";
  std::uniform_int_distribution<std::size_t> pick(0, grammar_chars.size() - 1);
  for (int i = 0; i < 400; ++i) {
    std::size_t len = i < 10 ? 10000 : static_cast<std::size_t>(i * 7 % 300);
    std::string s;
    for (std::size_t k = 0; k < len; ++k) {
      s += i % 2 ? static_cast<char>(byte(rng)) : grammar_chars[pick(rng)];
    }
    EXPECT_NO_FATAL_FAILURE({
      (void)try_parse_graph(s, false);
      (void)try_parse_graph(s, true);
      (void)try_parse_cnf(s);
      (void)Natural::try_parse(s);
      (void)split_names(s);
    });
  }
}

TEST(Totality, ExhaustiveShortStrings) {
  for (const auto& s : all_strings("ab,! ", 6)) {
    auto g = try_parse_graph(s, false);
    if (g) {
      EXPECT_EQ(parse_graph(encode_graph(*g), false), *g);
    }
    auto f = try_parse_cnf(s);
    if (f) {
      EXPECT_EQ(parse_cnf(encode_cnf(*f)), *f);
    }
  }
}

TEST(Spaces, Counts) {
  // Graphs on vertex-set prefixes of size 0..4: 1 + 1 + 2 + 8 + 64.
  EXPECT_EQ(all_graphs(4, false).size(), 76u);
  // Digraphs: 1 + 1 + 4 + 64 + 4096.
  EXPECT_EQ(all_graphs(4, true).size(), 4166u);
  EXPECT_EQ(graphs_on(5, false).size(), 1024u);
  EXPECT_EQ(naturals(0, 200).size(), 201u);
  EXPECT_EQ(all_strings("ab", 2).size(), 7u);
  EXPECT_EQ(vertex_name(0), "a");
  EXPECT_EQ(vertex_name(25), "z");
  EXPECT_EQ(vertex_name(26), "ba");
  EXPECT_EQ(cycle_graph(4), "a,b a,d b,c c,d");
}

TEST(Spaces, ParseSpace) {
  EXPECT_EQ(parse_space("graphs:3").size(), all_graphs(3, false).size());
  EXPECT_EQ(parse_space("naturals:2..5"), (InstanceSpace{"2", "3", "4", "5"}));
  EXPECT_EQ(parse_space("cnfs:2x2"), all_cnfs(2, 2));
  EXPECT_EQ(parse_space("strings:ab:1"), (InstanceSpace{"", "a", "b"}));
  EXPECT_THROW(parse_space("bananas:3"), std::invalid_argument);
}
