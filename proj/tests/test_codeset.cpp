#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "dnacodex/codeset.hpp"

using namespace dnacodex;

namespace {

CodeSet make_code(CodeParams p, std::initializer_list<const char*> texts) {
  std::vector<Sequence> members;
  for (const char* t : texts) members.push_back(Sequence::parse(t));
  return CodeSet(p, std::move(members));
}

Sequence random_gc_sequence(int n, int w, Rng& rng) { return sample_constant_gc(n, w, rng); }

// Grows a random strong code by brute-force compatibility checks only.
CodeSet random_strong_code(CodeParams p, Rng& rng, int tries) {
  CodeSet code(p);
  for (int t = 0; t < tries; ++t) {
    const Sequence s = random_gc_sequence(p.n, p.w, rng);
    if (hamming(s, reverse_complement(s)) < p.d) continue;
    bool ok = true;
    for (const Sequence& m : code.members()) {
      if (hamming(s, m) < p.d || hamming(s, reverse_complement(m)) < p.d) {
        ok = false;
        break;
      }
    }
    if (ok) code.insert(s);
  }
  return code;
}

}  // namespace

TEST_CASE("code params are validated at construction") {
  CHECK_NOTHROW(CodeParams(4, 3, 2));
  CHECK_THROWS_AS(CodeParams(0, 1, 0), Error);
  CHECK_THROWS_AS(CodeParams(33, 3, 2), Error);
  CHECK_THROWS_AS(CodeParams(4, 0, 2), Error);
  CHECK_THROWS_AS(CodeParams(4, 5, 2), Error);
  CHECK_THROWS_AS(CodeParams(4, 3, -1), Error);
  CHECK_THROWS_AS(CodeParams(4, 3, 5), Error);
}

TEST_CASE("codeset keeps members deduplicated in canonical order") {
  CodeSet code = make_code(CodeParams(4, 3, 2), {"GGAA", "AAGG", "GGAA"});
  CHECK(code.size() == 2);
  CHECK(code.members()[0].str() == "AAGG");
  CHECK(code.members()[1].str() == "GGAA");
  CHECK(code.contains(Sequence::parse("AAGG")));
  CHECK_FALSE(code.contains(Sequence::parse("ACGT")));

  CHECK_FALSE(code.insert(Sequence::parse("AAGG")));  // set semantics
  CHECK(code.size() == 2);
  CHECK(code.insert(Sequence::parse("ACGT")));
  CHECK(code.erase(Sequence::parse("ACGT")));
  CHECK_FALSE(code.erase(Sequence::parse("ACGT")));

  CHECK_THROWS_AS(code.insert(Sequence::parse("AAGGA")), Error);
  CHECK_THROWS_AS(CodeSet(CodeParams(4, 3, 2), {Sequence::parse("AAGGA")}), Error);
}

TEST_CASE("verify_weak") {
  const CodeParams p(5, 3, 2);
  CHECK(verify_weak(make_code(p, {"AAGGA", "AGAAG"})).valid);
  CHECK(verify_weak(CodeSet(p)).valid);

  const VerifyReport bad = verify_weak(make_code(p, {"GGAAA", "GGAAT"}));
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].kind == ViolationKind::HammingPair);
  CHECK(bad.violations[0].value == 1);

  const VerifyReport gc = verify_weak(make_code(p, {"AAAAA"}));
  CHECK_FALSE(gc.valid);
  REQUIRE(gc.violations.size() == 1);
  CHECK(gc.violations[0].kind == ViolationKind::GcContent);
  CHECK(gc.violations[0].value == 0);
}

TEST_CASE("verify_strong") {
  CHECK(verify_strong(CodeSet(CodeParams(4, 3, 2))).valid);

  const VerifyReport self = verify_strong(make_code(CodeParams(4, 3, 2), {"ACGT"}));
  CHECK_FALSE(self.valid);
  REQUIRE(self.violations.size() == 1);
  CHECK(self.violations[0].kind == ViolationKind::SelfComplement);
  CHECK(self.violations[0].value == 0);

  // Reporting is exhaustive, not fail-fast: every offending pair shows up.
  const VerifyReport multi =
      verify_strong(make_code(CodeParams(4, 4, 2), {"AAGG", "AAGC", "CCTT"}));
  CHECK_FALSE(multi.valid);
  CHECK(multi.violations.size() == 3);
  const auto count_kind = [&multi](ViolationKind kind) {
    return std::count_if(multi.violations.begin(), multi.violations.end(),
                         [kind](const Violation& v) { return v.kind == kind; });
  };
  CHECK(count_kind(ViolationKind::HammingPair) == 1);
  CHECK(count_kind(ViolationKind::ComplementPair) == 2);
}

TEST_CASE("strong validity implies weak validity on random codes") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(6));
    const int d = 2 + static_cast<int>(rng.next_below(3));
    const CodeParams p(n, std::min(d, n), n / 2);
    const CodeSet code = random_strong_code(p, rng, 60);
    CHECK(verify_strong(code).valid);
    CHECK(verify_weak(code).valid);
  }
}

TEST_CASE("conflicts agrees with the brute-force filter") {
  const CodeParams p(5, 3, 2);
  CHECK(conflicts(CodeSet(p), Sequence::parse("AAGGA")).empty());

  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const CodeSet code = random_strong_code(p, rng, 40);
    const Sequence probe = sample_admissible(p.n, p.d, p.w, rng);
    const auto got = conflicts(code, probe);
    std::vector<Sequence> expected;
    for (const Sequence& m : code.members())
      if (hamming(probe, m) < p.d || hamming(probe, reverse_complement(m)) < p.d)
        expected.push_back(m);
    CHECK(got == expected);
  }

  // A member always conflicts with itself.
  CodeSet code = make_code(p, {"AAGGA"});
  const auto self = conflicts(code, Sequence::parse("AAGGA"));
  REQUIRE(self.size() == 1);
  CHECK(self[0].str() == "AAGGA");

  CHECK_THROWS_AS(conflicts(code, Sequence::parse("AAGG")), Error);
}

TEST_CASE("empty conflict set is exactly insertability") {
  Rng rng(31);
  const CodeParams p(6, 3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    CodeSet code = random_strong_code(p, rng, 50);
    const Sequence probe = sample_admissible(p.n, p.d, p.w, rng);
    const bool no_conflicts = conflicts(code, probe).empty();
    CodeSet extended = code;
    extended.insert(probe);
    CHECK(no_conflicts == verify_strong(extended).valid);
  }
}

TEST_CASE("removing a member leaves it conflict-free against the rest") {
  Rng rng(37);
  const CodeParams p(5, 3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const CodeSet code = random_strong_code(p, rng, 50);
    if (code.empty()) continue;
    for (const Sequence& m : code.members()) {
      CodeSet rest = code;
      rest.erase(m);
      CHECK(conflicts(rest, m).empty());
    }
  }
}

TEST_CASE("halving upper bound") {
  CHECK(halving_upper_bound(9) == 4);
  CHECK(halving_upper_bound(30) == 15);
  CHECK(halving_upper_bound(1) == 0);
  CHECK_THROWS_AS(halving_upper_bound(0), Error);
}

TEST_CASE("code file writer emits header and canonical order") {
  const CodeSet code = make_code(CodeParams(4, 3, 2), {"GGAA", "AAGG"});
  const std::string text = code_file_string(code);
  CHECK(text == "# n=4 d=3 w=2 size=2\nAAGG\nGGAA\n");
}

TEST_CASE("code file reader: comments, blanks, round-trip, errors") {
  std::istringstream in("# a comment\n\nAAGG\n# another\nGGAA\nAAGG\n");
  const CodeSet code = read_code_file(in, CodeParams(4, 3, 2));
  CHECK(code.size() == 2);  // duplicate line collapses

  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const CodeSet original = random_strong_code(CodeParams(6, 4, 3), rng, 40);
    std::istringstream round(code_file_string(original));
    const CodeSet back = read_code_file(round, original.params());
    CHECK(back.members() == original.members());
  }

  std::istringstream bad_symbol("AXGG\n");
  CHECK_THROWS_AS(read_code_file(bad_symbol, CodeParams(4, 3, 2)), Error);
  std::istringstream bad_length("AAGGA\n");
  try {
    read_code_file(bad_length, CodeParams(4, 3, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}
