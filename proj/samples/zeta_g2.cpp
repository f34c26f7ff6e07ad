// Sum over irreducible characters of G_2(F_7) of (|G| / chi(1))^s, and the
// representation zeta function obtained by dividing out |G|^s.
#include <cmath>
#include <iostream>

#include "charstack/genus_table.hpp"

int main() {
    using namespace charstack;
    const auto g2 = load_genus_table(std::string(CHARSTACK_DEFAULT_DATA_DIR) + "/g2.genus");
    const double order = g2.order.eval_real(7.0);
    for (double s : {0.0, 1.0, 2.0}) {
        const double weighted = zeta_table(g2, 7, s);
        std::cout << "s=" << s << ": sum (|G|/chi(1))^s = " << weighted << ", zeta = " << weighted / std::pow(order, s) << '\n';
    }
}
