#include "spindir/clebsch.hpp"

#include <cmath>
#include <vector>

namespace spindir {

double log_factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(2048);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::lgamma(static_cast<double>(i) + 1.0);
        return t;
    }();
    if (n < 0) return 0.0;
    if (n < static_cast<int>(table.size())) return table[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double cg_coefficient(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    require_valid_jm(j1, m1, "cg_coefficient");
    require_valid_jm(j2, m2, "cg_coefficient");
    require_valid_jm(J, M, "cg_coefficient");

    if ((m1 + m2) != M) return 0.0;
    const int tj1 = j1.twice(), tj2 = j2.twice(), tJ = J.twice();
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
    if (((tj1 + tj2 + tJ) & 1) != 0) return 0.0;

    // Everything below works with integer factorial arguments; parity of the
    // inputs guarantees all halved sums are integers.
    const int a = (tj1 + tj2 - tJ) / 2;
    const int b = (tj1 - tj2 + tJ) / 2;
    const int c = (-tj1 + tj2 + tJ) / 2;
    const int j1pm1 = (tj1 + m1.twice()) / 2, j1mm1 = (tj1 - m1.twice()) / 2;
    const int j2pm2 = (tj2 + m2.twice()) / 2, j2mm2 = (tj2 - m2.twice()) / 2;
    const int JpM = (tJ + M.twice()) / 2, JmM = (tJ - M.twice()) / 2;

    const double ln_pre =
        0.5 * (std::log(tJ + 1.0) + log_factorial(a) + log_factorial(b) + log_factorial(c) -
               log_factorial((tj1 + tj2 + tJ) / 2 + 1) + log_factorial(JpM) + log_factorial(JmM) +
               log_factorial(j1pm1) + log_factorial(j1mm1) + log_factorial(j2pm2) + log_factorial(j2mm2));

    const int t4base = (tJ - tj2 + m1.twice()) / 2;
    const int t5base = (tJ - tj1 - m2.twice()) / 2;

    double sum = 0.0;
    for (int k = 0; k <= a; ++k) {
        const int t1 = a - k;
        const int t2 = j1mm1 - k;
        const int t3 = j2pm2 - k;
        const int t4 = t4base + k;
        const int t5 = t5base + k;
        if (t1 < 0 || t2 < 0 || t3 < 0 || t4 < 0 || t5 < 0) continue;
        const double ln_term = log_factorial(k) + log_factorial(t1) + log_factorial(t2) +
                               log_factorial(t3) + log_factorial(t4) + log_factorial(t5);
        const double term = std::exp(ln_pre - ln_term);
        sum += (k & 1) ? -term : term;
    }
    return sum;
}

}  // namespace spindir
