#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace agx;

namespace {

// adding machine with a redundant copy of a and a second identity
Automaton padded_adding() {
  Automaton a = Automaton::with_states(2, {"e", "a", "a_copy", "e2"});
  a.set(0, 0, 0, 0);
  a.set(0, 1, 1, 0);
  a.set(1, 0, 1, 0);
  a.set(1, 1, 0, 2);  // goes to the copy; behaviorally the same loop
  a.set(2, 0, 1, 3);
  a.set(2, 1, 0, 1);
  a.set(3, 0, 0, 3);
  a.set(3, 1, 1, 0);
  return a;
}

bool same_tables(const Automaton& x, const Automaton& y) {
  return x.alphabet == y.alphabet && x.names == y.names && x.output_tab == y.output_tab &&
         x.next_tab == y.next_tab && x.identity == y.identity;
}

}  // namespace

TEST_CASE("behavior partition merges equal states") {
  Automaton a = padded_adding();
  auto cls = behavior_partition(a);
  CHECK(cls[0] == cls[3]);  // both identities
  CHECK(cls[1] == cls[2]);  // a and its copy
  CHECK(cls[0] != cls[1]);
}

TEST_CASE("minimization quotients to the adding machine") {
  Minimized m = minimize_with_map(padded_adding());
  REQUIRE(m.automaton.size() == 2);
  CHECK(m.automaton.names == std::vector<std::string>{"e", "a"});
  REQUIRE(m.automaton.identity.has_value());
  CHECK(*m.automaton.identity == 0);
  CHECK(m.state_map == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("minimization needs iterated refinement") {
  // identical output rows everywhere; only depth-2 behavior separates u from w
  Automaton a = Automaton::with_states(2, {"u", "v", "w"});
  a.set(0, 0, 0, 1);
  a.set(0, 1, 1, 1);
  a.set(1, 0, 0, 2);
  a.set(1, 1, 1, 2);
  a.set(2, 0, 1, 2);
  a.set(2, 1, 0, 2);
  CHECK(minimize(a).size() == 3);
}

TEST_CASE("minimize is idempotent on every family") {
  for (const Automaton& a : agxtest::standard_families()) {
    Automaton once = minimize(a);
    CHECK(same_tables(once, minimize(once)));
  }
}

TEST_CASE("minimization preserves the action exhaustively") {
  Automaton a = padded_adding();
  Minimized m = minimize_with_map(a);
  for (int n = 0; n <= 5; ++n)
    for (const Word& w : agxtest::all_words(2, n))
      for (int s = 0; s < a.size(); ++s) {
        auto [im_orig, rest_orig] = apply_state(a, s, w);
        auto [im_min, rest_min] =
            apply_state(m.automaton, m.state_map[static_cast<std::size_t>(s)], w);
        CHECK(im_orig == im_min);
        CHECK(m.state_map[static_cast<std::size_t>(rest_orig)] == rest_min);
      }
}

TEST_CASE("minimization preserves the action on families") {
  for (const Automaton& a : agxtest::standard_families()) {
    Minimized m = minimize_with_map(a);
    for (int n = 0; n <= 3; ++n)
      for (const Word& w : agxtest::all_words(a.alphabet, n))
        for (int s = 0; s < a.size(); ++s)
          CHECK(apply_state(a, s, w).first ==
                apply_state(m.automaton, m.state_map[static_cast<std::size_t>(s)], w).first);
  }
}

TEST_CASE("two copies of the trivial state merge") {
  Automaton a = Automaton::with_states(2, {"e1", "e2"});
  a.set(0, 0, 0, 1);
  a.set(0, 1, 1, 1);
  a.set(1, 0, 0, 0);
  a.set(1, 1, 1, 0);
  Automaton m = minimize(a);
  CHECK(m.size() == 1);
  REQUIRE(m.identity.has_value());
}
