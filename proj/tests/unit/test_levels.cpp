#include <gtest/gtest.h>

#include <map>
#include <set>

#include "molsim/foundation/errors.hpp"
#include "molsim/levels/ket.hpp"
#include "molsim/levels/transitions.hpp"
#include "support/property.hpp"

using namespace molsim;
using namespace molsim::levels;

namespace {

LevelKet ket(const char* s) { return parse_ket(s); }

LevelKet random_ket(molsim::testing::Gen& g) {
  LevelKet k;
  const unsigned index = static_cast<unsigned>(g.index(3));
  if (g.coin() && index > 0) {
    k.manifold = {Multiplicity::Triplet, index};
    k.sublevel = static_cast<TripletAxis>(g.index(3));
  } else {
    k.manifold = {Multiplicity::Singlet, index};
  }
  k.vibrons.resize(g.index(4));
  for (auto& v : k.vibrons) v = static_cast<unsigned>(g.index(4));
  k.phonons.resize(g.index(3));
  for (auto& p : k.phonons) p = static_cast<unsigned>(g.index(12));
  const std::size_t nuclei = g.index(3);
  for (std::size_t i = 0; i < nuclei; ++i) {
    const int twice_i = 1 + static_cast<int>(g.index(4));
    const int twice_m = -twice_i + 2 * static_cast<int>(g.index(static_cast<std::size_t>(twice_i) + 1));
    k.nuclei.push_back({HalfInt::from_twice(twice_i), HalfInt::from_twice(twice_m)});
  }
  return k;
}

}  // namespace

TEST(Ket, LiteralRoundTripsExactly) {
  for (const char* s : {"S1;v=[0,1];p=[];n=[(1/2,+1/2)]", "T1,x;v=[];p=[];n=[]",
                        "S0;v=[2];p=[0,0,3];n=[(1,0),(3/2,-3/2)]", "T2,z;v=[];p=[1];n=[]"}) {
    EXPECT_EQ(to_string(parse_ket(s)), s);
  }
}

TEST(Ket, RandomKetsRoundTrip) {
  const auto failure = molsim::testing::for_all(101, 2000, [](molsim::testing::Gen& g, int) -> std::string {
    const LevelKet k = random_ket(g);
    const std::string text = to_string(k);
    const LevelKet back = parse_ket(text);
    if (!(back == k)) return "value mismatch for " + text;
    if (to_string(back) != text) return "text mismatch for " + text;
    return {};
  });
  EXPECT_TRUE(failure.empty()) << failure;
}

TEST(Ket, RejectsMalformedLiterals) {
  for (const char* s : {"", "S1", "S1;v=[0,1];p=[]", "S1;v=[01];p=[];n=[]", "X1;v=[];p=[];n=[]",
                        "S1,x;v=[];p=[];n=[]", "T1;v=[];p=[];n=[]", "S1;v=[-1];p=[];n=[]",
                        "S1;v=[];p=[];n=[(1/2,1/2)]", "S1;v=[];p=[];n=[(1/2,+3/2)]",
                        "S1;v=[];p=[];n=[(2/2,0)]", "S1;v=[];p=[];n=[(1,+0)]",
                        "S1;v=[];p=[];n=[] ", "S1;v=[ 1];p=[];n=[]"}) {
    EXPECT_THROW(parse_ket(s), KetSyntaxError) << s;
  }
}

TEST(Ket, TrailingZerosDoNotChangeIdentity) {
  EXPECT_EQ(ket("S0;v=[1,0,0];p=[];n=[]"), ket("S0;v=[1];p=[];n=[]"));
  EXPECT_EQ(ket("S0;v=[];p=[0];n=[]"), make_ket(S0));
  EXPECT_NE(ket("S0;v=[0,1];p=[];n=[]"), ket("S0;v=[1];p=[];n=[]"));
}

TEST(Ket, ValidateEnforcesSublevelRule) {
  EXPECT_THROW(make_ket(T1), InvalidArgument);
  LevelKet k = make_ket(T1, TripletAxis::Y);
  EXPECT_NO_THROW(k.validate());
  k.sublevel.reset();
  EXPECT_THROW(k.validate(), InvalidArgument);
  LevelKet s = make_ket(S1);
  s.sublevel = TripletAxis::X;
  EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Transitions, WorkedExamples) {
  EXPECT_EQ(classify_transition(ket("S1;v=[];p=[];n=[]"), ket("S0;v=[];p=[];n=[]")),
            TransitionClass::ZPL);
  EXPECT_EQ(classify_transition(ket("T1,x;v=[];p=[];n=[]"), ket("T1,y;v=[];p=[];n=[]")),
            TransitionClass::MicrowaveSpin);
  EXPECT_EQ(classify_transition(ket("S0;v=[1];p=[];n=[]"), ket("S0;v=[];p=[];n=[]")),
            TransitionClass::VibrationalRelaxation);
}

TEST(Transitions, EmissionFamily) {
  const LevelKet s1 = make_ket(S1);
  EXPECT_EQ(classify_transition(s1, ket("S0;v=[0,1];p=[];n=[]")), TransitionClass::VibronicEmission);
  EXPECT_EQ(classify_transition(s1, ket("S0;v=[];p=[2];n=[]")), TransitionClass::PhononWing);
  EXPECT_EQ(classify_transition(s1, ket("S0;v=[1];p=[1];n=[]")), TransitionClass::PhononWing);
  EXPECT_EQ(classify_transition(ket("S1;v=[1];p=[];n=[]"), make_ket(S0)), TransitionClass::Forbidden);
}

TEST(Transitions, SpinCrossings) {
  const LevelKet t1 = make_ket(T1, TripletAxis::Z);
  EXPECT_EQ(classify_transition(make_ket(S1), t1), TransitionClass::ISC);
  EXPECT_EQ(classify_transition(t1, make_ket(S0)), TransitionClass::ISC);
  EXPECT_EQ(classify_transition(t1, make_ket(S0), Channel::Radiative),
            TransitionClass::Phosphorescence);
  EXPECT_EQ(classify_transition(ket("T1,z;v=[1];p=[];n=[]"), make_ket(S0), Channel::Radiative),
            TransitionClass::ISC);
}

TEST(Transitions, NuclearLabelsMustMatch) {
  EXPECT_EQ(classify_transition(ket("S1;v=[];p=[];n=[(1/2,+1/2)]"),
                                ket("S0;v=[];p=[];n=[(1/2,-1/2)]")),
            TransitionClass::Forbidden);
  EXPECT_EQ(classify_transition(ket("S1;v=[];p=[];n=[(1/2,+1/2)]"),
                                ket("S0;v=[];p=[];n=[(1/2,+1/2)]")),
            TransitionClass::ZPL);
}

TEST(Transitions, TotalAndSelfPairsForbidden) {
  molsim::testing::Gen g(5);
  std::vector<LevelKet> kets;
  for (int i = 0; i < 60; ++i) {
    LevelKet k = random_ket(g);
    k.nuclei.clear();
    kets.push_back(k);
  }
  std::set<TransitionClass> seen;
  for (const auto& a : kets) {
    EXPECT_EQ(classify_transition(a, a), TransitionClass::Forbidden);
    for (const auto& b : kets) {
      for (Channel c : {Channel::Nonradiative, Channel::Radiative}) {
        const TransitionClass k = classify_transition(a, b, c);
        EXPECT_FALSE(to_string(k).empty());
        seen.insert(k);
      }
    }
  }
  EXPECT_GE(seen.size(), 5u);
}

TEST(Kasha, RelaxesToLowestExcitedManifold) {
  EXPECT_EQ(kasha_emitting_state({{ket("S1;v=[0,1];p=[];n=[]"), 1.0}}), make_ket(S1));
  EXPECT_EQ(kasha_emitting_state({{make_ket(S1), 1.0}}), make_ket(S1));
  EXPECT_EQ(kasha_emitting_state({{ket("T1,z;v=[1];p=[];n=[]"), 1.0}}), make_ket(T1, TripletAxis::Z));
  EXPECT_EQ(kasha_emitting_state({{ket("S2;v=[];p=[];n=[]"), 0.5}, {ket("S1;v=[2];p=[1];n=[]"), 0.5}}),
            make_ket(S1));
}

TEST(Kasha, Errors) {
  EXPECT_THROW(kasha_emitting_state({{make_ket(S0), 1.0}}), EmptyPopulation);
  EXPECT_THROW(kasha_emitting_state({{make_ket(S1), 0.5}}), InvalidArgument);
  EXPECT_THROW(kasha_emitting_state({{make_ket(S1), 1.5}, {make_ket(S0), -0.5}}), InvalidArgument);
}
