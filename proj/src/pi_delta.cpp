#include "braidforge/pi_delta.hpp"

namespace braidforge {

namespace {

BraidWord expand_token(const PiDeltaToken& t, int strands) {
    BraidWord base(strands);
    switch (t.kind) {
        case PiDeltaToken::Kind::Pi:
            base = pi_word(t.l, t.s, strands);
            break;
        case PiDeltaToken::Kind::Delta:
            base = delta_word(t.l, t.s, strands);
            break;
        case PiDeltaToken::Kind::Sigma:
            if (t.i < 1 || t.i >= strands)
                throw ParamError("sigma index " + std::to_string(t.i) +
                                 " out of range for B_" + std::to_string(strands));
            base = BraidWord(strands, {t.i});
            break;
        case PiDeltaToken::Kind::Rev:
            base = rev(expand(t.sub, strands));
            break;
    }
    return power(base, t.exp);
}

}  // namespace

BraidWord expand(const PiDeltaExpr& expr, int strands) {
    BraidWord w(strands);
    for (const auto& t : expr) w = concat(w, expand_token(t, strands));
    return w;
}

}  // namespace braidforge
