#include "icc/language.hpp"

#include <map>
#include <set>

namespace icc {

LanguageOracle oracle_from_sofic(const SoficPresentation& shift) {
  auto dfa = std::make_shared<Dfa>(determinize(shift));
  LanguageOracle out;
  out.alphabet = shift.alphabet();
  out.contains = [shift](WordView w) { return admits(shift, w); };
  if (dfa->num_states == 0) {
    out.recognizer = LanguageOracle::Recognizer{{-1}, [](const LanguageOracle::State&, Symbol) {
                                                  return std::optional<LanguageOracle::State>();
                                                }};
    return out;
  }
  out.recognizer = LanguageOracle::Recognizer{
      {0}, [dfa](const LanguageOracle::State& s, Symbol a) -> std::optional<LanguageOracle::State> {
        if (s[0] < 0) return std::nullopt;
        const long t = dfa->step(static_cast<std::size_t>(s[0]), a);
        if (t < 0) return std::nullopt;
        return LanguageOracle::State{t};
      }};
  return out;
}

namespace {

enum : std::int64_t { kFree = 0, kAfterC = 1, kAfterD = 2 };
enum : Symbol { kA = 0, kB = 1, kC = 2, kD = 3 };

// state (phase, j, i): after c a^j, or after c a^j d b^i
std::optional<LanguageOracle::State> counterexample_step(const LanguageOracle::State& s, Symbol x) {
  const std::int64_t phase = s[0], j = s[1], i = s[2];
  if (x == kC) {
    if (phase == kAfterD && i == j) return std::nullopt;
    return LanguageOracle::State{kAfterC, 0, 0};
  }
  if (phase == kAfterC && x == kA) return LanguageOracle::State{kAfterC, j + 1, 0};
  if (phase == kAfterC && x == kD) return LanguageOracle::State{kAfterD, j, 0};
  if (phase == kAfterD && x == kB) return LanguageOracle::State{kAfterD, j, i + 1};
  return LanguageOracle::State{kFree, 0, 0};
}

}  // namespace

LanguageOracle counterexample_oracle() {
  LanguageOracle out;
  out.alphabet = Alphabet(std::vector<std::string>{"a", "b", "c", "d"});
  out.contains = [](WordView w) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      if (w[start] != kC) continue;
      std::size_t p = start + 1, j = 0, i = 0;
      while (p < w.size() && w[p] == kA) ++p, ++j;
      if (p >= w.size() || w[p] != kD) continue;
      ++p;
      while (p < w.size() && w[p] == kB) ++p, ++i;
      if (p < w.size() && w[p] == kC && i == j) return false;
    }
    return true;
  };
  out.recognizer = LanguageOracle::Recognizer{{kFree, 0, 0}, counterexample_step};
  return out;
}

namespace {

// Interns the depth-d residual tree of a recognizer state.
class ResidualInterner {
 public:
  explicit ResidualInterner(const LanguageOracle& oracle, std::size_t guard) : oracle_(oracle), guard_(guard) {}

  std::size_t id(const LanguageOracle::State& s, int depth) {
    const auto key = std::make_pair(s, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<long> children;
    if (depth > 0) {
      for (Symbol a = 0; a < oracle_.alphabet.size(); ++a) {
        auto t = oracle_.recognizer->step(s, a);
        children.push_back(t ? static_cast<long>(id(*t, depth - 1)) : -1);
      }
    }
    const std::size_t out = trees_.emplace(std::move(children), trees_.size()).first->second;
    if (memo_.size() > guard_) throw GuardError("residual interning exceeded the guard");
    memo_.emplace(key, out);
    return out;
  }

 private:
  const LanguageOracle& oracle_;
  std::size_t guard_;
  std::map<std::pair<LanguageOracle::State, int>, std::size_t> memo_;
  std::map<std::vector<long>, std::size_t> trees_;
};

void require_lengths(int k, int m) {
  if (k < 0 || m < 0) throw InputError("lengths must be >= 0");
}

}  // namespace

std::vector<std::size_t> residual_profile_count(const LanguageOracle& oracle, int k, int m, std::size_t guard) {
  if (!oracle.recognizer) return residual_profile_count_exhaustive(oracle, k, m, guard);
  require_lengths(k, m);
  ResidualInterner interner(oracle, guard);
  std::vector<std::size_t> counts;
  std::set<LanguageOracle::State> layer{oracle.recognizer->initial};
  for (int len = 0; len <= k; ++len) {
    std::set<std::size_t> profiles;
    for (const auto& s : layer) profiles.insert(interner.id(s, m));
    counts.push_back(profiles.size());
    std::set<LanguageOracle::State> next;
    for (const auto& s : layer) {
      for (Symbol a = 0; a < oracle.alphabet.size(); ++a) {
        if (auto t = oracle.recognizer->step(s, a)) next.insert(std::move(*t));
      }
    }
    if (next.size() > guard) throw GuardError("residual layer exceeded the guard");
    layer.swap(next);
  }
  return counts;
}

std::vector<std::size_t> residual_profile_count_exhaustive(const LanguageOracle& oracle, int k, int m,
                                                           std::size_t guard) {
  require_lengths(k, m);
  const std::size_t q = oracle.alphabet.size();
  std::vector<std::size_t> counts;
  std::vector<Word> layer{Word{}};
  std::size_t work = 0;
  for (int len = 0; len <= k; ++len) {
    std::set<std::vector<Word>> profiles;
    for (const Word& u : layer) {
      // the profile is prefix-closed, so grow it breadth first
      std::vector<Word> profile{Word{}}, frontier{Word{}};
      Word uw;
      for (int d = 0; d < m; ++d) {
        std::vector<Word> grown;
        for (const Word& w : frontier) {
          for (Symbol a = 0; a < q; ++a) {
            uw = u;
            uw.insert(uw.end(), w.begin(), w.end());
            uw.push_back(a);
            if (++work > guard * 64) throw GuardError("exhaustive residual search exceeded the guard");
            if (!oracle.contains(uw)) continue;
            Word next = w;
            next.push_back(a);
            grown.push_back(std::move(next));
          }
        }
        profile.insert(profile.end(), grown.begin(), grown.end());
        frontier.swap(grown);
      }
      profiles.insert(std::move(profile));
    }
    counts.push_back(profiles.size());
    std::vector<Word> next;
    for (const Word& u : layer) {
      for (Symbol a = 0; a < q; ++a) {
        Word v = u;
        v.push_back(a);
        if (oracle.contains(v)) next.push_back(std::move(v));
      }
    }
    layer.swap(next);
  }
  return counts;
}

}  // namespace icc
