#include <gtest/gtest.h>

#include "reference.hpp"
#include "revpeg/constructive.hpp"

using namespace revpeg;

namespace {

// Configuration on the H graph (a=1 .. e=5) from letters.
Configuration on_h(std::string_view letters) { return Configuration(5, h_state(letters)); }

}  // namespace

TEST(Configuration, Construction) {
  EXPECT_EQ(Configuration::full(4).peg_count(), 4);
  EXPECT_EQ(Configuration::one_hole(4, 2).pegs(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(Configuration::single_peg(4, 3).first_peg(), 3);
  EXPECT_EQ(Configuration::full(64).peg_count(), 64);
  EXPECT_EQ(Configuration(3, 0).first_peg(), 0);
  EXPECT_THROW(Configuration(3, 0b1000), ValidationError);
  EXPECT_THROW(Configuration(65, 0), CapacityExceeded);
  EXPECT_THROW(Configuration::one_hole(4, 5), ValidationError);
  EXPECT_THROW(Configuration::from_pegs(4, {0}), ValidationError);
}

TEST(LegalMoves, P3SingleJump) {
  const auto moves = legal_moves(path_graph(3), Configuration::from_pegs(3, {1, 2}));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], Move::jump(1, 2, 3));
}

TEST(LegalMoves, HFrozenAtCE) { EXPECT_TRUE(legal_moves(h_graph(), on_h("ce")).empty()); }

TEST(LegalMoves, HFromEReachesCD) {
  bool found = false;
  for (const Move& m : legal_moves(h_graph(), on_h("e")))
    if (m.kind == MoveKind::Unjump && apply_move(on_h("e"), m) == on_h("cd")) found = true;
  EXPECT_TRUE(found);
}

TEST(LegalMoves, EmptyAndFullHaveNoMoves) {
  EXPECT_TRUE(legal_moves(complete_graph(5), Configuration(5, 0)).empty());
  EXPECT_TRUE(legal_moves(complete_graph(5), Configuration::full(5)).empty());
}

TEST(LegalMoves, SortedAndMatchReference) {
  std::mt19937_64 rng(3);
  const Graph g = parse_graph("doublestar:2,2");
  for (int trial = 0; trial < 200; ++trial) {
    Configuration c(g.order(), rng() & ((1u << g.order()) - 1));
    const auto moves = legal_moves(g, c);
    EXPECT_TRUE(std::is_sorted(moves.begin(), moves.end()));
    std::set<ref::State> mine, theirs;
    for (const Move& m : moves) mine.insert(ref::from_config(apply_move(c, m)));
    for (const auto& st : ref::steps(g, ref::from_config(c))) theirs.insert(st.next);
    EXPECT_EQ(mine, theirs);
    // one move per triple at most, so no duplicates either
    EXPECT_EQ(mine.size(), moves.size());
  }
}

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(Configuration::from_pegs(3, {1, 2}), Move::jump(1, 2, 3)), Configuration::from_pegs(3, {3}));
  EXPECT_EQ(apply_move(Configuration::from_pegs(3, {3}), Move::unjump(1, 2, 3)), Configuration::from_pegs(3, {1, 2}));
  // c=3, d=4, e=5
  EXPECT_EQ(apply_move(on_h("cd"), Move::jump(3, 4, 5)), on_h("e"));
  EXPECT_THROW(apply_move(Configuration::from_pegs(3, {1, 2}), Move::jump(3, 2, 1)), IllegalMove);
  EXPECT_THROW(apply_move(Configuration::from_pegs(3, {1, 2}), Move::unjump(1, 2, 3)), IllegalMove);
  EXPECT_THROW(apply_move(Configuration::from_pegs(3, {1, 2}), Move::jump(1, 1, 3)), IllegalMove);
}

TEST(Replay, Examples) {
  const Graph p3 = path_graph(3);
  const Configuration start = Configuration::from_pegs(3, {1, 2});
  EXPECT_EQ(replay(p3, {start, {}}), start);
  EXPECT_EQ(replay(p3, {start, {Move::jump(1, 2, 3)}}), Configuration::from_pegs(3, {3}));
  try {
    replay(p3, {start, {Move::jump(3, 2, 1)}});
    FAIL();
  } catch (const IllegalMoveAt& e) {
    EXPECT_EQ(e.index(), 0u);
  }
}

TEST(Replay, RejectsNonEdges) {
  // pattern fits but 1-3 is not an edge of P4
  const Graph p4 = path_graph(4);
  const MoveSequence s{Configuration::from_pegs(4, {1, 3}), {Move::jump(2, 3, 4), Move::jump(1, 3, 4)}};
  try {
    replay(p4, {Configuration::from_pegs(4, {2, 3}), {Move::jump(2, 3, 4), Move::jump(4, 1, 2)}});
    FAIL();
  } catch (const IllegalMoveAt& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  EXPECT_THROW(replay(p4, s), IllegalMoveAt);
  EXPECT_THROW(replay(path_graph(5), {Configuration::full(4), {}}), ValidationError);
}

TEST(Move, InverseAndText) {
  const Move m = Move::jump(1, 2, 3);
  EXPECT_EQ(m.inverse(), Move::unjump(1, 2, 3));
  EXPECT_EQ(m.inverse().inverse(), m);
  EXPECT_EQ(to_string(m), "Jump(1,2,3)");
  EXPECT_EQ(to_string(m.inverse()), "Unjump(1,2,3)");
  EXPECT_EQ(unjump_count({Configuration::full(3), {m, m.inverse(), m}}), 1u);
}
