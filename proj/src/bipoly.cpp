#include "clc/bipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace clc {

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

int BiPoly::second_degree() const {
    std::set<int> degs;
    for (const auto& [e, c] : terms_) degs.insert(e.first + e.second);
    if (degs.size() < 2) return -1;
    return *std::next(degs.rbegin());
}

uint32_t BiPoly::eval(uint32_t x, uint32_t y) const {
    uint32_t acc = 0;
    for (const auto& [e, c] : terms_) {
        uint32_t t = ctx_->mul(c, ctx_->mul(ctx_->pow(x, static_cast<uint64_t>(e.first)),
                                            ctx_->pow(y, static_cast<uint64_t>(e.second))));
        acc = ctx_->add(acc, t);
    }
    return acc;
}

UniPoly BiPoly::substitute_line(uint32_t alpha, uint32_t beta) const {
    UniPoly acc(ctx_);
    for (const auto& [e, c] : terms_) {
        UniPoly t = linear_power(ctx_, alpha, beta, static_cast<uint64_t>(e.second));
        t = t * UniPoly::monomial(ctx_, c, e.first);
        acc = acc + t;
    }
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool named = false;
        if (c != 1 || (e.first == 0 && e.second == 0)) {
            os << c;
            named = true;
        }
        if (e.first > 0) {
            os << (named ? "*" : "") << "x";
            if (e.first > 1) os << "^" << e.first;
            named = true;
        }
        if (e.second > 0) {
            os << (named ? "*" : "") << "y";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

}  // namespace clc
