// Loads each shipped genus table and prints the dimension, number of
// components and Euler characteristic of the genus 2 character stack.
#include <iostream>
#include <string>

#include "charstack/genus_table.hpp"

int main() {
    using namespace charstack;
    for (const char* name : {"pgl2", "pgl3", "so5", "g2"}) {
        const auto table = load_genus_table(std::string(CHARSTACK_DEFAULT_DATA_DIR) + "/" + name + ".genus");
        const auto inv = invariants(count_polynomial_table(table, 2));
        std::cout << table.name << ": dimension " << inv.dimension << ", components " << to_string(inv.components) << ", euler "
                  << to_string(inv.euler) << '\n';
    }
}
