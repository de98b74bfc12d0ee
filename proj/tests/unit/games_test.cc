// Copyright 2026 The Arena Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "arena/core/rng.h"
#include "arena/games/bargain.h"
#include "arena/games/bid.h"
#include "arena/games/cards.h"
#include "arena/games/connect_four.h"
#include "arena/games/hanabi.h"
#include "arena/games/holdem.h"
#include "arena/games/registry.h"
#include "arena/games/tictactoe.h"
#include "arena/games/undercover.h"

namespace arena {
namespace {

ActionSpec Ttt(int seat, int row, int col) {
  return MakeAction(EnvKind::kTicTacToe, seat,
                    TttMove{seat == 0 ? Mark::kX : Mark::kO, row, col});
}

ActionSpec C4(int seat, int col) {
  return MakeAction(EnvKind::kConnectFour, seat, C4Move{seat == 0 ? Mark::kX : Mark::kO, col});
}

// ---- TicTacToe --------------------------------------------------------------

TEST(TicTacToeTest, RenderParseRoundTrip) {
  TttBoard b;
  b.at(1, 3) = Cell::kX;
  b.at(2, 2) = Cell::kO;
  for (bool hints : {true, false}) {
    const auto parsed = ParseTttBoard(RenderTttBoard(b, hints));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, b);
  }
  EXPECT_EQ(RenderTttBoard(b, false), "- - X\n- O -\n- - -");
  EXPECT_FALSE(ParseTttBoard("X X\n- -").has_value());
}

TEST(TicTacToeTest, AvailableListIsRowMajor) {
  TttBoard b;
  b.at(1, 1) = Cell::kX;
  const std::string list = TttAvailableList(b);
  EXPECT_EQ(list.rfind("(1, 2), (1, 3), (2, 1)", 0), 0u);
}

TEST(TicTacToeTest, ColumnWinEndsGame) {
  auto s = Reset(EnvKind::kTicTacToe, 0);
  for (const auto& a : {Ttt(0, 1, 1), Ttt(1, 1, 2), Ttt(0, 2, 1), Ttt(1, 2, 2), Ttt(0, 3, 1)}) {
    s->ApplyAction(a);
  }
  EXPECT_TRUE(s->IsTerminal());
  EXPECT_EQ(s->GetOutcome(), Outcome::Win(0));
  EXPECT_EQ(s->CurrentSeat(), -1);
  EXPECT_TRUE(s->LegalActions().empty());
  EXPECT_EQ(s->Returns(), (std::vector<double>{1.0, -1.0}));
}

TEST(TicTacToeTest, WrongMarkIsRejected) {
  auto s = Reset(EnvKind::kTicTacToe, 0);
  const ActionSpec o_first = MakeAction(EnvKind::kTicTacToe, 0, TttMove{Mark::kO, 1, 1});
  EXPECT_FALSE(s->CheckAction(o_first).ok);
  EXPECT_FALSE(s->CheckAction(Ttt(0, 4, 4)).ok);
}

TEST(TicTacToeTest, OptimalMovesTakeAnImmediateWin) {
  TttBoard b;
  b.at(1, 1) = b.at(1, 2) = Cell::kX;
  b.at(2, 1) = b.at(2, 2) = Cell::kO;
  const auto moves = TttOptimalMoves(b);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], (TttMove{Mark::kX, 1, 3}));
}

// ---- ConnectFour ------------------------------------------------------------

TEST(ConnectFourTest, PiecesFallAndFullColumnsAreIllegal) {
  auto s = Reset(EnvKind::kConnectFour, 0);
  for (int i = 0; i < 6; ++i) s->ApplyAction(C4(i % 2, 4));
  const auto& b = static_cast<const ConnectFourState&>(*s).board();
  EXPECT_EQ(b.at(6, 4), Cell::kX);
  EXPECT_EQ(b.at(1, 4), Cell::kO);
  EXPECT_FALSE(s->CheckAction(C4(0, 4)).ok);
  EXPECT_EQ(s->LegalActions().size(), 6u);
  EXPECT_EQ(C4AvailableList(b), "1, 2, 3, 5, 6, 7");
}

TEST(ConnectFourTest, DiagonalWin) {
  auto s = Reset(EnvKind::kConnectFour, 0);
  // X builds the rising diagonal (6,1) (5,2) (4,3) (3,4).
  for (int col : {1, 2, 2, 3, 3, 4, 3, 4, 4, 7, 4}) {
    s->ApplyAction(C4(s->CurrentSeat(), col));
  }
  EXPECT_TRUE(s->IsTerminal());
  EXPECT_EQ(s->GetOutcome(), Outcome::Win(0));
}

TEST(ConnectFourTest, RenderParseRoundTrip) {
  C4Board b;
  b.Drop(3, Mark::kX);
  b.Drop(3, Mark::kO);
  b.Drop(5, Mark::kX);
  const auto parsed = ParseC4Board(RenderC4Board(b, true));
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(*parsed, b);
  EXPECT_TRUE(b.IsValid());
  C4Board floating;
  floating.at(1, 1) = Cell::kX;
  EXPECT_FALSE(floating.IsValid());
}

// ---- Hold'em ----------------------------------------------------------------

HoldemState FixedHand() {
  const auto c = [](const char* s) { return *Card::Parse(s); };
  return HoldemState(HoldemConfig{}, 0, {{{c("AS"), c("AH")}, {c("KS"), c("KH")}}},
                     {c("2C"), c("7D"), c("9H"), c("JC"), c("3S")});
}

TEST(HoldemTest, BlindsAndFirstToAct) {
  const HoldemState s = FixedHand();
  EXPECT_EQ(s.committed(0), 1);
  EXPECT_EQ(s.committed(1), 2);
  EXPECT_EQ(s.CurrentSeat(), 0);
  EXPECT_EQ(s.ToCall(), 1);
  EXPECT_EQ(s.street(), Street::kPreflop);
  // Half pot after calling: pot 4 -> raise of 2.
  EXPECT_EQ(s.RaiseSize(HoldemAction::kRaiseHalfPot), 2);
  EXPECT_EQ(s.RaiseSize(HoldemAction::kRaiseFullPot), 4);
}

TEST(HoldemTest, FoldForfeitsTheBlind) {
  HoldemState s = FixedHand();
  s.ApplyAction(MakeAction(EnvKind::kTexasHoldem, 0, HoldemAction::kFold));
  EXPECT_TRUE(s.IsTerminal());
  EXPECT_EQ(s.Returns(), (std::vector<double>{-1.0, 1.0}));
  EXPECT_EQ(s.GetOutcome(), Outcome::Win(1));
}

TEST(HoldemTest, CheckedDownShowdownGoesToTheBetterHand) {
  HoldemState s = FixedHand();
  int plies = 0;
  while (!s.IsTerminal()) {
    s.ApplyAction(MakeAction(EnvKind::kTexasHoldem, s.CurrentSeat(), HoldemAction::kCheckCall));
    ASSERT_LT(++plies, 20);
  }
  EXPECT_EQ(s.Returns(), (std::vector<double>{2.0, -2.0}));
  EXPECT_EQ(s.GetOutcome(), Outcome::Win(0));
}

TEST(HoldemTest, ChipsAreConserved) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    auto s = Reset(EnvKind::kTexasHoldem, seed);
    while (!s->IsTerminal()) {
      const auto legal = s->LegalActions();
      s->ApplyAction(legal[rng.Below(legal.size())]);
    }
    const auto r = s->Returns();
    EXPECT_EQ(r[0] + r[1], 0.0);
    EXPECT_GE(r[0], -100.0);
    EXPECT_GE(r[1], -100.0);
  }
}

TEST(HoldemTest, DuplicateCardsRejected) {
  const auto c = [](const char* s) { return *Card::Parse(s); };
  EXPECT_THROW(HoldemState(HoldemConfig{}, 0, {{{c("AS"), c("AS")}, {c("KS"), c("KH")}}},
                           {c("2C"), c("7D"), c("9H"), c("JC"), c("3S")}),
               InvalidCardsError);
}

TEST(CardsTest, ParseAcceptsCommonSpellings) {
  EXPECT_EQ(Card::Parse("10s"), Card::Parse("TS"));
  EXPECT_EQ(Card::Parse("as")->ToString(), "AS");
  EXPECT_FALSE(Card::Parse("1X").has_value());
  EXPECT_EQ(ParseCards("AS, KD 2c").size(), 3u);
  EXPECT_THROW(ParseCards("AS ZZ"), InvalidCardsError);
}

// ---- Hanabi -----------------------------------------------------------------

TEST(HanabiTest, DeckCompositionIsPreserved) {
  const HanabiConfig config;
  const auto deck = HanabiDeck(config);
  EXPECT_EQ(deck.size(), 20u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    HanabiState s(seed, config);
    while (!s.IsTerminal()) {
      auto all = s.AllCards();
      ASSERT_EQ(all.size(), deck.size());
      std::map<std::pair<int, int>, int> counts;
      for (const auto& c : all) ++counts[{c.color, c.rank}];
      for (const auto& c : deck) --counts[{c.color, c.rank}];
      for (const auto& [k, n] : counts) ASSERT_EQ(n, 0);
      const auto legal = s.LegalActions();
      s.ApplyAction(legal[rng.Below(legal.size())]);
    }
  }
}

TEST(HanabiTest, TokensFollowTheRules) {
  const HanabiConfig config;
  // Seat 0 holds R1 Y1, seat 1 holds R2 Y2, then R3 Y3 ...
  std::vector<HanabiCard> deck = {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {0, 3}, {1, 3},
                                  {0, 4}, {1, 4}, {0, 5}, {1, 5}};
  HanabiState s(config, deck);
  EXPECT_EQ(s.info_tokens(), 3);
  // Discarding with full tokens is illegal.
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kHanabi, 0,
                                        HanabiMove{HanabiMove::Kind::kDiscard, 1}))
                   .ok);
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 0, HanabiMove{HanabiMove::Kind::kRevealRank, 2}));
  EXPECT_EQ(s.info_tokens(), 2);
  EXPECT_TRUE(s.hand(1)[0].rank_known);
  EXPECT_TRUE(s.hand(1)[1].rank_known);
  // A reveal must match a card.
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kHanabi, 1,
                                        HanabiMove{HanabiMove::Kind::kRevealRank, 5}))
                   .ok);
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 1, HanabiMove{HanabiMove::Kind::kDiscard, 1}));
  EXPECT_EQ(s.info_tokens(), 3);
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 0, HanabiMove{HanabiMove::Kind::kPlay, 1}));
  EXPECT_EQ(s.firework(0), 1);
  EXPECT_EQ(s.Score(), 1);
}

TEST(HanabiTest, MisplayWithOneLifeEndsInFailure) {
  std::vector<HanabiCard> deck = {{0, 3}, {0, 1}, {1, 1}, {1, 2}, {0, 2}, {1, 3}};
  HanabiState s(HanabiConfig{}, deck);
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 0, HanabiMove{HanabiMove::Kind::kPlay, 1}));
  EXPECT_TRUE(s.IsTerminal());
  EXPECT_EQ(s.life_tokens(), 0);
  EXPECT_EQ(s.GetOutcome(), Outcome::Failure());
}

TEST(HanabiTest, ScoreModes) {
  std::vector<HanabiCard> deck = {{0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}};
  HanabiState s(HanabiConfig{}, deck);
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 0, HanabiMove{HanabiMove::Kind::kPlay, 1}));
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 1, HanabiMove{HanabiMove::Kind::kPlay, 1}));
  s.ApplyAction(MakeAction(EnvKind::kHanabi, 0, HanabiMove{HanabiMove::Kind::kPlay, 2}));
  EXPECT_EQ(s.firework(0), 2);
  EXPECT_EQ(s.firework(1), 1);
  EXPECT_EQ(s.Score(HanabiScoreMode::kTopSum), 3);
  EXPECT_EQ(s.Score(HanabiScoreMode::kAllValues), 4);
}

// ---- Bargain ----------------------------------------------------------------

TEST(BargainTest, GeneratedInstancesSatisfyTheLimits) {
  const BargainLimits limits;
  const auto& all = ValidBargainInstances(limits);
  ASSERT_FALSE(all.empty());
  for (const auto& inst : all) {
    ASSERT_TRUE(inst.IsValid(limits));
    const int items = std::accumulate(inst.counts.begin(), inst.counts.end(), 0);
    EXPECT_GE(items, limits.min_items);
    EXPECT_LE(items, limits.max_items);
    EXPECT_EQ(inst.ValueOf(0, inst.counts), limits.total_value);
    EXPECT_EQ(inst.ValueOf(1, inst.counts), limits.total_value);
  }
  EXPECT_EQ(BargainGenerate(3), BargainGenerate(3));
}

TEST(BargainTest, DealSplitsTheItems) {
  BargainInstance inst{{2, 2, 1}, {{{2, 2, 2}, {0, 3, 4}}}};
  ASSERT_TRUE(inst.IsValid());
  BargainState s(0, inst);
  s.ApplyAction(MakeAction(EnvKind::kBargain, 0, BargainMove{false, {2, 0, 1}}));
  EXPECT_EQ(s.Observe(1, true).phase, "reply");
  s.ApplyAction(MakeAction(EnvKind::kBargain, 1, BargainMove{true, {}}));
  ASSERT_TRUE(s.IsTerminal());
  // Seat 0 keeps 2 hats and the apple for 6; seat 1 gets 2 balls for 6.
  EXPECT_EQ(s.Returns(), (std::vector<double>{6.0, 6.0}));
  EXPECT_EQ(s.GetOutcome(), Outcome::Draw());
}

TEST(BargainTest, NoDealAfterTenRoundsIsAFailure) {
  BargainState s(1);
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kBargain, 0, BargainMove{true, {}})).ok);
  int proposals = 0;
  while (!s.IsTerminal()) {
    s.ApplyAction(MakeAction(EnvKind::kBargain, s.CurrentSeat(), BargainMove{false, {0, 0, 0}}));
    ++proposals;
  }
  EXPECT_EQ(proposals, 20);
  EXPECT_EQ(s.status(), BargainStatus::kFailure);
  EXPECT_EQ(s.GetOutcome(), Outcome::Failure());
  EXPECT_EQ(s.Returns(), (std::vector<double>{0.0, 0.0}));
}

TEST(BargainTest, OverAskingIsIllegal) {
  BargainState s(2);
  const auto counts = s.instance().counts;
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kBargain, 0,
                                        BargainMove{false, {counts[0] + 1, 0, 0}}))
                   .ok);
}

// ---- Bid --------------------------------------------------------------------

TEST(BidTest, HighestBidWinsValueMinusBid) {
  const auto s = BidSettle({7600, 5000}, {10000, 9000}, 0);
  EXPECT_EQ(s.winner, 0);
  EXPECT_DOUBLE_EQ(s.rewards[0], 24.0);
  EXPECT_DOUBLE_EQ(s.rewards[1], 0.0);
}

TEST(BidTest, TiesAreBrokenBySeed) {
  std::map<int, int> winners;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = BidSettle({500, 500}, {1000, 1000}, seed);
    ++winners[s.winner];
    EXPECT_EQ(s.winner, BidSettle({500, 500}, {1000, 1000}, seed).winner);
  }
  EXPECT_GT(winners[0], 60);
  EXPECT_GT(winners[1], 60);
}

TEST(BidTest, BidsAtOrAboveValuationAreRejected) {
  EXPECT_THROW(BidSettle({1000, 10}, {1000, 1000}, 0), BidValidationError);
  EXPECT_THROW(BidSettle({-1, 10}, {1000, 1000}, 0), BidValidationError);
  BidState s(0, BidConfig{100, 10000, std::array<std::int64_t, 2>{1000, 2000}});
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kBid, 0, BidMove{1000})).ok);
  EXPECT_TRUE(s.CheckAction(MakeAction(EnvKind::kBid, 0, BidMove{999})).ok);
}

TEST(BidTest, SealedBidsStayHidden) {
  BidState s(0, BidConfig{100, 10000, std::array<std::int64_t, 2>{1000, 2000}});
  s.ApplyAction(MakeAction(EnvKind::kBid, 0, BidMove{777}));
  const Observation obs = s.Observe(1, true);
  for (const auto& [k, v] : obs.text_blocks) EXPECT_EQ(v.find("7.77"), std::string::npos) << k;
}

TEST(BidTest, ParseDollars) {
  EXPECT_EQ(ParseDollars("$1.08"), 108);
  EXPECT_EQ(ParseDollars("1"), 100);
  EXPECT_EQ(ParseDollars("1.5"), 150);
  EXPECT_FALSE(ParseDollars("1.005").has_value());
  EXPECT_FALSE(ParseDollars("abc").has_value());
  EXPECT_EQ(FormatCents(108), "1.08");
}

// ---- Undercover -------------------------------------------------------------

TEST(UndercoverTest, OneSeatHoldsTheOtherWord) {
  UndercoverState s(17, WordPair{"apple", "pear"});
  int pear = 0;
  for (int seat = 0; seat < 5; ++seat) pear += s.word(seat) == "pear";
  EXPECT_EQ(pear, 1);
  EXPECT_EQ(s.word(s.undercover_seat()), "pear");
}

TEST(UndercoverTest, UndercoverSeatIsRoughlyUniform) {
  std::map<int, int> counts;
  for (std::uint64_t seed = 0; seed < 5000; ++seed) ++counts[UndercoverSeatFor(seed, 5)];
  for (int seat = 0; seat < 5; ++seat) {
    EXPECT_GT(counts[seat], 850);
    EXPECT_LT(counts[seat], 1150);
  }
}

TEST(UndercoverTest, CluesMayNotRevealOrRepeat) {
  UndercoverState s(0, WordPair{"apple", "pear"});
  const int seat = s.CurrentSeat();
  const std::string mine = s.word(seat);
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kUndercover, seat,
                                        UndercoverClue{"I love " + mine + "s"}))
                   .ok);
  s.ApplyAction(MakeAction(EnvKind::kUndercover, seat, UndercoverClue{"It grows on trees."}));
  EXPECT_FALSE(s.CheckAction(MakeAction(EnvKind::kUndercover, s.CurrentSeat(),
                                        UndercoverClue{"it grows on trees."}))
                   .ok);
}

TEST(UndercoverTest, TallyRules) {
  const std::vector<bool> alive(5, true);
  EXPECT_EQ(UndercoverTally({{0, 2}, {1, 2}, {2, 0}, {3, 4}, {4, 2}}, alive, 0), 2);
  EXPECT_THROW(UndercoverTally({{0, 0}}, alive, 0), UndercoverValidationError);
  std::vector<bool> one_out = alive;
  one_out[3] = false;
  EXPECT_THROW(UndercoverTally({{0, 3}}, one_out, 0), UndercoverValidationError);
  EXPECT_THROW(UndercoverTally({{3, 0}}, one_out, 0), UndercoverValidationError);
  // Tie between seats 0 and 1 goes to one of them, fixed by the seed.
  const std::map<int, int> tie = {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 2}};
  std::map<int, int> picked;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int out = UndercoverTally(tie, alive, seed);
    ASSERT_TRUE(out == 0 || out == 1);
    ++picked[out];
    EXPECT_EQ(out, UndercoverTally(tie, alive, seed));
  }
  EXPECT_EQ(picked.size(), 2u);
}

TEST(UndercoverTest, WordPairParsing) {
  const auto pairs = ParseWordPairs("# comment\napple\tpear\n\nsun\tmoon\r\n");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[1], (WordPair{"sun", "moon"}));
  EXPECT_THROW(ParseWordPairs("apple pear\n"), ArenaError);
  EXPECT_THROW(ParseWordPairs("apple\tApple\n"), ArenaError);
  EXPECT_FALSE(DefaultWordPairs().empty());
}

}  // namespace
}  // namespace arena
