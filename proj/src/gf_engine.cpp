#include "partav/gf_engine.hpp"

#include <algorithm>

namespace partav {

namespace {

// 1 - z^(k+1)
IntPoly one_minus_z_pow(int k) {
    IntPoly p = IntPoly::constant(1) - IntPoly::monomial(1, k + 1);
    return p;
}

} // namespace

std::string theta_str(const ThetaWord& w) {
    std::string s;
    for (ThetaOp op : w) s += (op == ThetaOp::E) ? 'E' : 'N';
    return s;
}

ThetaWord theta_from_border(const Partition& mu) {
    if (!classify(mu).is_strict || mu.empty())
        fail(ErrorKind::NotStrict, "theta word needs a strict pattern");
    if (mu.weight() < 2) fail(ErrorKind::TooSmall, "theta word needs weight >= 2");
    // raw border, bottom row first: easts across each row end, then a north
    std::vector<char> steps;
    int prev = 0;
    for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it) {
        for (int e = prev; e < *it; ++e) steps.push_back('e');
        steps.push_back('n');
        prev = *it;
    }
    // drop the initial east, the final north, and the final east
    steps.erase(steps.begin());
    steps.pop_back();
    steps.pop_back();
    ThetaWord word;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == 'e') {
            word.push_back(ThetaOp::E);
        } else {
            word.push_back(ThetaOp::N);
            if (i + 1 < steps.size() && steps[i + 1] == 'e') ++i; // consume the paired east
        }
    }
    return word;
}

ThetaWord theta_recursive(const Partition& mu) {
    if (!classify(mu).is_super_strict || mu.empty())
        fail(ErrorKind::NotSuperStrict, "theta recursion needs a super-strict pattern");
    if (mu.weight() < 2) fail(ErrorKind::TooSmall, "theta word needs weight >= 2");
    if (mu.weight() == 2) return {}; // mu = (2)
    const int gap = mu.part(0) - mu.part(1);
    ThetaWord word;
    if (gap >= 3) {
        std::vector<int> rho_plus1(mu.parts());
        rho_plus1[0] -= 1;
        word = theta_recursive(Partition(std::move(rho_plus1)));
        word.push_back(ThetaOp::E);
    } else { // gap == 2
        std::vector<int> rho_plus1(mu.parts().begin() + 1, mu.parts().end());
        rho_plus1[0] += 1;
        word = theta_recursive(Partition(std::move(rho_plus1)));
        word.push_back(ThetaOp::N);
    }
    return word;
}

const RatFunc& ThetaEvaluator::eval(int level, int tspec) {
    if (level < 0 || level > static_cast<int>(word_.size()))
        fail(ErrorKind::IndexOutOfRange, "eval level outside the word");
    const auto key = std::make_pair(level, tspec);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    RatFunc value;
    if (level == 0) {
        if (tspec == EvalKey::kTZero) {
            value = RatFunc();
        } else {
            // zt/(1-zt) at t = z^k
            value = RatFunc(IntPoly::monomial(1, tspec + 1), one_minus_z_pow(tspec));
        }
    } else {
        const ThetaOp op = word_[static_cast<std::size_t>(level) - 1];
        if (op == ThetaOp::E) {
            if (tspec == EvalKey::kTZero) {
                value = eval(level - 1, 0);
            } else {
                const int k = tspec;
                const RatFunc shifted =
                    RatFunc(IntPoly::monomial(1, k + 1), IntPoly::constant(1)) *
                    eval(level - 1, k + 1);
                value = (eval(level - 1, 0) - shifted) /
                        RatFunc(one_minus_z_pow(k), IntPoly::constant(1));
            }
        } else {
            if (tspec == EvalKey::kTZero)
                fail(ErrorKind::NZeroUnsupported,
                     "t = 0 requested at an OpN level (word has adjacent norths)");
            const int k = tspec;
            const RatFunc at_zero = eval(level - 1, EvalKey::kTZero);
            RatFunc sum;
            for (int j = 0; j <= k; ++j) sum = sum + (eval(level - 1, j) - at_zero);
            value = sum / RatFunc(one_minus_z_pow(k), IntPoly::constant(1)) + at_zero;
        }
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

RatFunc gf_avoid(const Partition& mu) {
    if (mu.empty()) return {};      // every partition contains the empty pattern
    if (mu.weight() == 1) return {}; // every nonempty partition contains (1)
    if (!classify(mu).is_super_strict)
        fail(ErrorKind::NotSuperStrict,
             "pattern " + mu.str() +
                 " is not super-strict: adjacent parts differing by 1 force a "
                 "non-algebraic avoidance generating function; no rational form exists");
    ThetaEvaluator ev(theta_from_border(mu));
    return ev.eval(static_cast<int>(ev.word().size()), 0);
}

} // namespace partav
