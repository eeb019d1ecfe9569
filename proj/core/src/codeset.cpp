#include "dnacodex/codeset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dnacodex {

CodeParams::CodeParams(int n_, int d_, int w_) : n(n_), d(d_), w(w_) {
  if (n < 1 || n > kMaxSequenceLength)
    raise(Errc::InvalidParams, "n must be in [1, 32], got " + std::to_string(n));
  if (d < 1 || d > n)
    raise(Errc::InvalidParams,
          "d must be in [1, n], got d=" + std::to_string(d) + " with n=" + std::to_string(n));
  if (w < 0 || w > n)
    raise(Errc::InvalidParams,
          "w must be in [0, n], got w=" + std::to_string(w) + " with n=" + std::to_string(n));
}

CodeSet::CodeSet(CodeParams params, std::vector<Sequence> members)
    : params_(params), members_(std::move(members)) {
  for (const Sequence& s : members_)
    if (s.length() != params_.n)
      raise(Errc::LengthMismatch, "member " + s.str() + " has length " +
                                      std::to_string(s.length()) + ", expected " +
                                      std::to_string(params_.n));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool CodeSet::contains(const Sequence& s) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool CodeSet::insert(const Sequence& s) {
  if (s.length() != params_.n)
    raise(Errc::LengthMismatch, "cannot insert length-" + std::to_string(s.length()) +
                                    " sequence into length-" + std::to_string(params_.n) +
                                    " code");
  const auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool CodeSet::erase(const Sequence& s) noexcept {
  const auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return false;
  members_.erase(it);
  return true;
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::HammingPair: return "HammingPair";
    case ViolationKind::ComplementPair: return "ComplementPair";
    case ViolationKind::SelfComplement: return "SelfComplement";
    case ViolationKind::GcContent: return "GcContent";
  }
  return "Unknown";
}

namespace {

VerifyReport verify(const CodeSet& code, bool strong) {
  VerifyReport report;
  const auto& members = code.members();
  const int d = code.params().d;
  const int w = code.params().w;

  for (const Sequence& s : members) {
    const int gc = gc_content(s);
    if (gc != w)
      report.violations.push_back({ViolationKind::GcContent, s, std::nullopt, gc});
    if (strong) {
      const int self = hamming(s, reverse_complement(s));
      if (self < d)
        report.violations.push_back({ViolationKind::SelfComplement, s, std::nullopt, self});
    }
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    const Sequence rc_i = reverse_complement(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int dist = hamming(members[i], members[j]);
      if (dist < d)
        report.violations.push_back(
            {ViolationKind::HammingPair, members[i], members[j], dist});
      if (strong) {
        // hamming(s, RC(t)) == hamming(t, RC(s)), so one orientation covers
        // both ordered pairs.
        const int cdist = hamming(members[j], rc_i);
        if (cdist < d)
          report.violations.push_back(
              {ViolationKind::ComplementPair, members[i], members[j], cdist});
      }
    }
  }

  report.valid = report.violations.empty();
  return report;
}

}  // namespace

VerifyReport verify_weak(const CodeSet& code) { return verify(code, false); }

VerifyReport verify_strong(const CodeSet& code) { return verify(code, true); }

std::vector<Sequence> conflicts(const CodeSet& code, const Sequence& s) {
  if (s.length() != code.params().n)
    raise(Errc::LengthMismatch, "conflict query length " + std::to_string(s.length()) +
                                    " does not match code length " +
                                    std::to_string(code.params().n));
  const int d = code.params().d;
  const Sequence rc = reverse_complement(s);
  std::vector<Sequence> out;
  for (const Sequence& member : code.members()) {
    // hamming(s, RC(member)) == hamming(member, RC(s)).
    if (hamming(s, member) < d || hamming(member, rc) < d) out.push_back(member);
  }
  return out;
}

std::uint64_t halving_upper_bound(std::uint64_t a_gc) {
  if (a_gc < 1) raise(Errc::InvalidParams, "weak-code size must be at least 1");
  return a_gc / 2;
}

void write_code_file(const CodeSet& code, std::ostream& out) {
  const CodeParams& p = code.params();
  out << "# n=" << p.n << " d=" << p.d << " w=" << p.w << " size=" << code.size()
      << "\n";
  for (const Sequence& s : code.members()) out << s.str() << "\n";
}

std::string code_file_string(const CodeSet& code) {
  std::ostringstream out;
  write_code_file(code, out);
  return out.str();
}

CodeSet read_code_file(std::istream& in, CodeParams params) {
  std::vector<Sequence> members;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Sequence s = Sequence::parse(line);  // InvalidSymbol carries the position
    if (s.length() != params.n)
      raise(Errc::LengthMismatch, "line " + std::to_string(lineno) + ": length " +
                                      std::to_string(s.length()) + ", expected " +
                                      std::to_string(params.n));
    members.push_back(s);
  }
  return CodeSet(params, std::move(members));
}

}  // namespace dnacodex
