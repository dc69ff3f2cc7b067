// Shows largest-remainder apportionment, including a house-growth anomaly:
// with shares (6, 6, 2) the third party holds 2 of 10 seats but only 1 of 11.
#include <iostream>
#include <vector>

#include "mapr/apportionment.hpp"

static void show(const std::vector<mapr::Rat>& weights, int k) {
  mapr::ApportionmentResult r = mapr::largest_remainder(weights, k);
  std::cout << "k=" << k << " ->";
  for (int s : r.canonical) std::cout << " " << s;
  if (r.all_tied.size() > 1) std::cout << "  (" << r.all_tied.size() << " tied resolutions)";
  std::cout << "\n";
}

int main() {
  std::vector<mapr::Rat> shares = {mapr::Rat(11, 20), mapr::Rat(1, 4), mapr::Rat(1, 5)};
  std::cout << "shares 11/20, 1/4, 1/5\n";
  show(shares, 3);
  show(shares, 4);

  std::vector<mapr::Rat> votes = {mapr::Rat(6), mapr::Rat(6), mapr::Rat(2)};
  std::cout << "votes 6, 6, 2\n";
  show(votes, 10);
  show(votes, 11);
  return 0;
}
