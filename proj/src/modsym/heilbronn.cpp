#include "modsym/heilbronn.hpp"

#include "algebra/arith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace newforms {

namespace {

// Nearest integer to a/b, ties away from zero.
long round_half_away(long a, long b) {
    long aa = std::labs(a), ab = std::labs(b);
    long q = (2 * aa + ab) / (2 * ab);
    return ((a < 0) != (b < 0)) ? -q : q;
}

} // namespace

std::vector<HeilbronnMatrix> heilbronn_cremona(long p) {
    if (!is_prime(p)) throw std::invalid_argument("cremona list needs a prime");
    // The half-integer rounding in the generic walk assumes p odd.
    if (p == 2) return {{1, 0, 0, 2}, {2, 0, 0, 1}, {2, 1, 0, 1}, {1, 0, 1, 2}};
    std::vector<HeilbronnMatrix> out;
    out.push_back({1, 0, 0, p});
    for (long r = -(p / 2); r <= p / 2; ++r) {
        long x1 = p, x2 = -r, y1 = 0, y2 = 1;
        long a = -p, b = r;
        out.push_back({x1, x2, y1, y2});
        while (b != 0) {
            long q = round_half_away(a, b);
            long c = a - b * q;
            a = -b;
            b = c;
            long x3 = q * x2 - x1;
            long y3 = q * y2 - y1;
            x1 = x2;
            x2 = x3;
            y1 = y2;
            y2 = y3;
            out.push_back({x1, x2, y1, y2});
        }
    }
    return out;
}

std::vector<HeilbronnMatrix> heilbronn_merel(long n) {
    if (n < 1) throw std::invalid_argument("merel list needs n >= 1");
    std::vector<HeilbronnMatrix> out;
    // a + d <= n + 1 because bc = ad - n with b <= a-1, c <= d-1.
    for (long a = 1; a <= n; ++a) {
        for (long d = 1; a + d <= n + 1; ++d) {
            long m = a * d - n;
            if (m < 0) continue;
            if (m == 0) {
                for (long c = 0; c < d; ++c) out.push_back({a, 0, c, d});
                for (long b = 1; b < a; ++b) out.push_back({a, b, 0, d});
                continue;
            }
            for (long b = 1; b < a; ++b) {
                if (m % b) continue;
                long c = m / b;
                if (c < d) out.push_back({a, b, c, d});
            }
        }
    }
    return out;
}

} // namespace newforms
