#include "sltensor/subset.hpp"

#include <sstream>

namespace sltensor {

Subset Subset::of(int n, const std::vector<int>& members) {
  unsigned mask = 0;
  for (int i : members) {
    if (i < 1 || i > n) throw InvalidInput("subset member " + std::to_string(i) + " outside 1.." + std::to_string(n));
    mask |= 1u << (i - 1);
  }
  return Subset(n, mask);
}

Subset Subset::parse(const std::string& text, int n) {
  if (text == "all") return all(n);
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("");
      members.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad subset member '" + item + "'");
    }
  }
  return of(n, members);
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Subset::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (unsigned m = 0; m < (1u << n); ++m) out.emplace_back(n, m);
  return out;
}

}  // namespace sltensor
