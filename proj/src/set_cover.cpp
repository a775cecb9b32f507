#include "mmds/set_cover.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "mmds/error.hpp"

namespace mmds {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Encoded {
  std::size_t universe_size = 0;
  std::vector<Bits> sets;
};

Encoded encode(const SetCoverInstance& sc) {
  std::map<int, std::size_t> index;
  for (int e : sc.universe) index.emplace(e, index.size());
  Encoded enc;
  enc.universe_size = index.size();
  for (std::size_t i = 0; i < sc.family.size(); ++i) {
    Bits b(enc.universe_size);
    for (int e : sc.family[i]) {
      // Elements outside the universe need no covering and are ignored.
      if (auto it = index.find(e); it != index.end()) b.set(it->second);
    }
    enc.sets.push_back(std::move(b));
  }
  return enc;
}

class MinCoverSearch {
 public:
  explicit MinCoverSearch(std::size_t upper) : best_(upper) {}

  // `best_` starts at an exclusive upper bound.
  std::size_t run(const Bits& uncovered, std::vector<Bits> sets) {
    solve(uncovered, std::move(sets), 0);
    return best_;
  }

 private:
  void solve(Bits uncovered, std::vector<Bits> sets, std::size_t chosen) {
    while (true) {
      if (uncovered.none()) {
        best_ = std::min(best_, chosen);
        return;
      }
      if (chosen + 1 >= best_) return;

      for (auto& s : sets) s &= uncovered;
      sets.erase(std::remove_if(sets.begin(), sets.end(), [](const Bits& s) { return s.none(); }), sets.end());
      std::sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) { return a.count() > b.count(); });
      // Drop sets contained in an earlier (not smaller) set.
      std::vector<Bits> kept;
      for (auto& s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Bits& t) { return s.is_subset_of(t); });
        if (!dominated) kept.push_back(std::move(s));
      }
      sets = std::move(kept);
      if (sets.empty()) return;

      const std::size_t largest = sets.front().count();
      const std::size_t need = (uncovered.count() + largest - 1) / largest;
      if (chosen + need >= best_) return;

      // An element in exactly one set forces that set.
      bool forced = false;
      for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
        std::size_t holder = sets.size(), hits = 0;
        for (std::size_t i = 0; i < sets.size() && hits < 2; ++i) {
          if (sets[i].test(e)) {
            holder = i;
            ++hits;
          }
        }
        if (hits == 0) return;
        if (hits == 1) {
          uncovered -= sets[holder];
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(holder));
          ++chosen;
          forced = true;
          break;
        }
      }
      if (!forced) break;
    }

    Bits pick = sets.front();
    std::vector<Bits> rest(sets.begin() + 1, sets.end());
    Bits after = uncovered;
    after -= pick;
    solve(after, rest, chosen + 1);
    solve(uncovered, std::move(rest), chosen);
  }

  std::size_t best_;
};

// Lexicographic DFS over index combinations of exactly `size` sets.
class OrderedCovers {
 public:
  OrderedCovers(const Encoded& enc, std::size_t budget) : enc_(enc), budget_(budget) {
    // last_holder[e] = largest index of a set containing e
    last_holder_.assign(enc.universe_size, -1);
    for (std::size_t i = 0; i < enc.sets.size(); ++i)
      for (auto e = enc.sets[i].find_first(); e != Bits::npos; e = enc.sets[i].find_next(e))
        last_holder_[e] = static_cast<long>(i);
  }

  bool run(std::size_t size, bool skip_useless, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    size_ = size;
    skip_useless_ = skip_useless;
    visit_ = &visit;
    picked_.clear();
    Bits all(enc_.universe_size);
    all.set();
    return dfs(0, all);
  }

  bool exhausted() const { return budget_ == 0; }

 private:
  bool dfs(std::size_t start, const Bits& uncovered) {
    if (budget_ == 0) return false;
    --budget_;
    if (picked_.size() == size_) return uncovered.none() && (*visit_)(picked_);
    const std::size_t slots = size_ - picked_.size();
    if (enc_.sets.size() - start < slots) return false;
    for (auto e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      if (last_holder_[e] < static_cast<long>(start)) return false;
    }
    for (std::size_t i = start; i + slots <= enc_.sets.size(); ++i) {
      if (skip_useless_ && !enc_.sets[i].intersects(uncovered)) continue;
      picked_.push_back(i);
      Bits next = uncovered;
      next -= enc_.sets[i];
      if (dfs(i + 1, next)) return true;
      picked_.pop_back();
      if (budget_ == 0) return false;
    }
    return false;
  }

  const Encoded& enc_;
  std::size_t budget_;
  std::vector<long> last_holder_;
  std::size_t size_ = 0;
  bool skip_useless_ = false;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
  std::vector<std::size_t> picked_;
};

}  // namespace

std::optional<std::size_t> minimum_cover_size(const SetCoverInstance& sc) {
  const Encoded enc = encode(sc);
  Bits all(enc.universe_size);
  all.set();
  if (all.none()) return 0;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  MinCoverSearch search(none);
  const std::size_t best = search.run(all, enc.sets);
  if (best == none) return std::nullopt;
  return best;
}

std::optional<std::vector<std::size_t>> exact_set_cover(const SetCoverInstance& sc) {
  auto opt = minimum_cover_size(sc);
  if (!opt || *opt > sc.bound) return std::nullopt;
  if (*opt == 0) return std::vector<std::size_t>{};
  const Encoded enc = encode(sc);
  OrderedCovers search(enc, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> result;
  search.run(*opt, true, [&](const std::vector<std::size_t>& picked) {
    result = picked;
    return true;
  });
  if (result.empty()) throw Error("internal: minimum cover of known size not found");
  return result;
}

CoverEnumeration enumerate_covers(const SetCoverInstance& sc, std::size_t max_size, std::size_t budget,
                                  const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const Encoded enc = encode(sc);
  OrderedCovers search(enc, budget);
  for (std::size_t s = 0; s <= std::min(max_size, enc.sets.size()); ++s) {
    if (search.run(s, false, visit)) return CoverEnumeration::Accepted;
    if (search.exhausted()) return CoverEnumeration::BudgetHit;
  }
  return CoverEnumeration::Exhausted;
}

}  // namespace mmds
