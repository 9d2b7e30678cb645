#pragma once

#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

// Symbolic expression over the Pi/Delta shorthand: a sequence of tokens,
// each raised to an integer exponent. Rev wraps a sub-expression. Expansion
// to a braid word is total and deterministic; no simplification happens here.
struct PiDeltaToken {
    enum class Kind { Pi, Delta, Sigma, Rev };

    Kind kind;
    int l = 0;       // Pi/Delta lower index
    int s = 0;       // Pi/Delta upper index
    int i = 0;       // Sigma generator index
    long long exp = 1;
    std::vector<PiDeltaToken> sub;  // Rev payload

    static PiDeltaToken pi(int l, int s, long long exp = 1) {
        return {Kind::Pi, l, s, 0, exp, {}};
    }
    static PiDeltaToken delta(int l, int s, long long exp = 1) {
        return {Kind::Delta, l, s, 0, exp, {}};
    }
    static PiDeltaToken sigma(int i, long long exp = 1) {
        return {Kind::Sigma, 0, 0, i, exp, {}};
    }
    static PiDeltaToken reversed(std::vector<PiDeltaToken> sub, long long exp = 1) {
        return {Kind::Rev, 0, 0, 0, exp, std::move(sub)};
    }
};

using PiDeltaExpr = std::vector<PiDeltaToken>;

BraidWord expand(const PiDeltaExpr& expr, int strands);

}  // namespace braidforge
