#pragma once

#include <map>
#include <vector>

#include "partav/partition.hpp"
#include "partav/ratfunc.hpp"

namespace partav {

/// One operator of the southeast-border word: OpE for a plain east step,
/// OpN for a north-east step.
enum class ThetaOp { E, N };
using ThetaWord = std::vector<ThetaOp>;

std::string theta_str(const ThetaWord& w); // "EENENE", "" when empty

/// Compiles the border of a strict pattern of weight >= 2: read bottom-left
/// to top-right, drop the initial east step and the final east and north
/// steps, then east -> OpE and north-east -> OpN.  For super-strict
/// patterns the word has length mu_1 - 2 and no adjacent OpN; only those
/// words are evaluated.
ThetaWord theta_from_border(const Partition& mu);

/// Same word built by the recursion: Theta(2) is empty; mu = rho + (2) with
/// gap >= 3 appends OpE to Theta(rho + (1)); gap exactly 2 appends OpN to
/// Theta((mu_2 + 1, mu_3, ...)).  Super-strict patterns only.
ThetaWord theta_recursive(const Partition& mu);

/// Specialization request for the bivariate level functions: t = z^k
/// (k = 0 meaning t = 1) or t = 0.
struct EvalKey {
    int level;         // 0..len(word)
    int tspec;         // k >= 0 for t = z^k, kTZero for t = 0
    static constexpr int kTZero = -1;
};

/// Evaluates the operator word over the memoized dependency tree of
/// specializations.  Level 0 is zt/(1-zt); level i applies word[i-1].
/// Requesting t = 0 at an OpN level throws NZeroUnsupported (never reached
/// from super-strict words, which have no adjacent OpN).
class ThetaEvaluator {
public:
    explicit ThetaEvaluator(ThetaWord word) : word_(std::move(word)) {}

    const ThetaWord& word() const { return word_; }
    const RatFunc& eval(int level, int tspec);
    const RatFunc& eval(const EvalKey& key) { return eval(key.level, key.tspec); }

private:
    ThetaWord word_;
    std::map<std::pair<int, int>, RatFunc> memo_;
};

/// The exact rational function whose z^n coefficient (n >= 1) counts the
/// partitions of n avoiding mu.  No constant term is added: the calculus
/// output is emitted as-is (callers wanting the empty partition counted add
/// 1 themselves).  Patterns must be super-strict; strict patterns with two
/// parts differing by 1 have no algebraic generating function and are
/// rejected.  mu = (1) and the empty pattern give 0.
RatFunc gf_avoid(const Partition& mu);

} // namespace partav
