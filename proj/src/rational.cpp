#include "gsp/rational.hpp"

#include <cctype>

namespace gsp {

Rat parse_decimal(const std::string& text) {
    if (text.empty()) throw InvalidParams("empty numeric argument");
    size_t i = 0;
    long long num = 0;
    long long den = 1;
    bool any_digit = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidParams("bad numeric argument: " + text);
        if (num > (1ll << 52)) throw InvalidParams("numeric argument too large: " + text);
        num = num * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < text.size()) {  // fractional part
        for (++i; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidParams("bad numeric argument: " + text);
            if (num > (1ll << 52) || den > (1ll << 52))
                throw InvalidParams("numeric argument too precise: " + text);
            num = num * 10 + (text[i] - '0');
            den *= 10;
            any_digit = true;
        }
    }
    if (!any_digit) throw InvalidParams("bad numeric argument: " + text);
    return Rat(num, den);
}

}  // namespace gsp
