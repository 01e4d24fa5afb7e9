#include "speechscore/rational.hpp"

namespace speechscore {

std::string Rational::decimal(int digits) const {
    using i128 = __int128;
    bool neg = num_ < 0;
    i128 n = neg ? -static_cast<i128>(num_) : static_cast<i128>(num_);
    i128 d = den_;
    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 scaled = n * scale;
    i128 q = scaled / d;
    i128 r = scaled % d;
    // round half to even
    if (2 * r > d || (2 * r == d && (q & 1))) ++q;

    std::string frac;
    for (int i = 0; i < digits; ++i) {
        frac.push_back(static_cast<char>('0' + static_cast<int>(q % 10)));
        q /= 10;
    }
    std::string whole;
    if (q == 0) whole = "0";
    while (q > 0) {
        whole.push_back(static_cast<char>('0' + static_cast<int>(q % 10)));
        q /= 10;
    }
    std::string out;
    if (neg) out.push_back('-');
    for (auto it = whole.rbegin(); it != whole.rend(); ++it) out.push_back(*it);
    if (digits > 0) {
        out.push_back('.');
        for (auto it = frac.rbegin(); it != frac.rend(); ++it) out.push_back(*it);
    }
    return out;
}

}  // namespace speechscore
