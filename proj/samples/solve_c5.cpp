// Solves maximum weight independent set on the 5-cycle and prints the recursion size.
#include <iostream>

#include "ptfree/ptfree.hpp"

int main() {
    const ptfree::Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto result = ptfree::find_mis(c5, c5.all_vertices(), ptfree::unit_weights(5), 5);
    std::cout << "weight " << result.solution.weight << " calls " << result.stats.calls << '\n';
    return 0;
}
