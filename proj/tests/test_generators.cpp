#include <doctest.h>

#include <sstream>

#include "sepdfa/error.hpp"
#include "sepdfa/generators.hpp"
#include "support.hpp"

using namespace sepdfa;
using sepdfa::test::W;

namespace {

// Independent reading of the cycle rule: for every repeat at position p of a
// letter last seen at q, the cycle is w[q+1..p].
Label reference_parity(const Word& w) {
  bool win = false, lose = false;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p; q-- > 0;)
      if (w[q] == w[p]) {
        Letter top = 0;
        for (std::size_t r = q + 1; r <= p; ++r) top = std::max(top, w[r]);
        (top % 2 == 0 ? win : lose) = true;
        break;
      }
  if (win && !lose) return Label::Positive;
  if (lose && !win) return Label::Negative;
  return Label::DontCare;
}

}  // namespace

TEST_CASE("parity words from the examples") {
  CHECK(classify_parity_word(W("001212"), 3) == Label::Positive);
  CHECK(classify_parity_word(W("13123312"), 4) == Label::Negative);
  CHECK(classify_parity_word(W("21232"), 4) == Label::DontCare);
  CHECK(classify_parity_word(W("012"), 3) == Label::DontCare);  // no repeat
  CHECK_THROWS_AS(classify_parity_word(W("3"), 3), ParseError);
}

TEST_CASE("classification matches the reference on every short word") {
  for (std::size_t c = 2; c <= 4; ++c)
    for (std::size_t len = 0; len <= 6; ++len) {
      Word w(len, 0);
      while (true) {
        CHECK(classify_parity_word(w, c) == reference_parity(w));
        std::size_t pos = len;
        while (pos > 0 && ++w[pos - 1] == c) w[--pos] = 0;
        if (pos == 0) break;
      }
    }
}

TEST_CASE("parity sample counts") {
  auto s23 = gen_parity_samples({2, 3});
  CHECK(s23.positives.size() == 3);
  CHECK(s23.negatives.size() == 5);
  CHECK(s23.alphabet_size == 2);
  auto s34 = gen_parity_samples({3, 4});
  CHECK(s34.positives.size() == 51);
  CHECK(s34.negatives.size() == 20);
  auto s47 = gen_parity_samples({4, 7});
  CHECK(s47.positives.size() == 1645);
  CHECK(s47.negatives.size() == 5235);
}

TEST_CASE("parity generation rejects bad configurations") {
  CHECK_THROWS_AS(gen_parity_samples({1, 3}), Error);
  CHECK_THROWS_AS(gen_parity_samples({3, 3}), Error);
  CHECK_THROWS_AS(gen_parity_samples({4, 7}, 1000), Error);
}

TEST_CASE("random DFAs are deterministic and fully reachable") {
  CHECK(gen_random_dfa(5, 3, 77) == gen_random_dfa(5, 3, 77));
  auto one = gen_random_dfa(1, 3, 9);
  CHECK(one.state_count() == 1);
  for (Letter a = 0; a < 3; ++a) CHECK(one.successor(0, a) == 0);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + seed % 7;
    auto d = gen_random_dfa(n, 2, seed);
    REQUIRE(d.state_count() == n);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (Letter a = 0; a < 2; ++a)
        if (auto t = d.successor(q, a); !seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(n));
  }
}

TEST_CASE("samples from a DFA carry its labels") {
  auto d = gen_random_dfa(4, 2, 5);
  auto s = gen_samples_from_dfa(d, 200, 11, 6);
  CHECK(s.size() == 200);
  for (const auto& w : s.positives) {
    CHECK(d.accepts(w));
    CHECK(w.size() <= 11);
  }
  for (const auto& w : s.negatives) CHECK_FALSE(d.accepts(w));
  CHECK(s == gen_samples_from_dfa(d, 200, 11, 6));
  CHECK_THROWS_AS(gen_samples_from_dfa(d, 10, 1, 6), Error);  // only 3 words of length <= 1
}

TEST_CASE("acceptor stats for parity(2,3)") {
  auto st = acceptor_stats(gen_parity_samples({2, 3}));
  CHECK(st.positives == 3);
  CHECK(st.negatives == 5);
  CHECK(st.apta == 15);
  CHECK(st.min3dfa == 8);
  CHECK(st.ddfa == 12);
  st.colours = 2;
  st.length = 3;
  std::ostringstream out;
  write_stats_line(out, st);
  CHECK(out.str() == "2\t3\t3\t5\t15\t8\t12\n");
  CHECK(acceptor_stats(gen_parity_samples({2, 3}), false).apta == 0);
}
