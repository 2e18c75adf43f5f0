/*
   Copyright 2026 The qleft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Prints the antipode on generators and checks (S*I)(w) = eps(w)1 and the
// failure of (I*S)(X[1,1]) = 1 for a chosen n (default 2).

#include <cstdlib>
#include <iostream>

#include <qleft/qleft.hpp>

int main(int argc, char** argv) {
    using namespace qleft;
    const int n = argc > 1 ? std::atoi(argv[1]) : 2;
    if (n < 2 || n > 4) {
        std::cerr << "usage: left_antipode_demo [n in 2..4]\n";
        return 2;
    }
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const Antipode S(rs);

    std::cout << "S on generators, n = " << n << ":\n";
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Word g = Word::generator(i, j);
            std::cout << "  S(" << to_string(g) << ") = " << to_string(S(g)) << "\n";
        }

    const auto words = enumerate_irreducible_upto(n, 2, rs);
    const Report left = check_left_antipode(n, words);
    std::cout << render_text(left);

    std::cout << "(I*S)(X[1,1]) = " << to_string(right_antipode_witness(n)) << "\n";
    return left.pass() ? 0 : 1;
}
