#include "packlab/perm.hpp"

#include <map>
#include <mutex>

namespace packlab {

std::vector<int> cycle_type(const Perm& p) {
  int k = (int)p.size();
  std::vector<char> seen(k, 0);
  std::vector<int> type;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

static PermTable build_table(int k) {
  PermTable t;
  t.k = k;
  t.fact = 1;
  for (int i = 2; i <= k; ++i) t.fact *= i;
  if (k > 5) throw std::invalid_argument("perm_table: k > 5 unsupported");
  Perm p = identity_perm(k);
  do {
    t.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  t.inv.resize(t.fact);
  t.comp.assign(t.fact, std::vector<int>(t.fact));
  t.derange.resize(t.fact);
  for (int a = 0; a < t.fact; ++a) {
    t.inv[a] = t.index_of(inverse(t.perms[a]));
    for (int b = 0; b < t.fact; ++b) {
      t.comp[a][b] = t.index_of(compose(t.perms[a], t.perms[b]));
      if (pointwise_distinct(t.perms[a], t.perms[b])) t.derange[a].set(b);
    }
  }

  std::map<std::vector<int>, int> first_of_type;
  for (int a = 0; a < t.fact; ++a) {
    auto ct = cycle_type(t.perms[a]);
    if (!first_of_type.count(ct)) first_of_type[ct] = a;
  }
  for (auto& [ct, a] : first_of_type) t.class_reps.push_back(a);
  std::sort(t.class_reps.begin(), t.class_reps.end());
  return t;
}

const PermTable& perm_table(int k) {
  static std::mutex mu;
  static std::map<int, PermTable> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_table(k)).first;
  return it->second;
}

}  // namespace packlab
