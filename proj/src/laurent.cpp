#include "braidforge/laurent.hpp"

#include <sstream>

#include "braidforge/errors.hpp"

namespace braidforge {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_[0] = BigInt(c);
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exp) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[exp] = std::move(c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw InternalError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw InternalError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt() : it->second;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c, int exp) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e + exp] = k * c;
    return r;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw InternalError("division by zero polynomial");
    const BigInt lead = divisor.terms_.rbegin()->second;
    if (!lead.is_unit())
        throw InternalError("divided_exact requires a +-1 leading coefficient");
    if (is_zero()) return LaurentPoly();
    // an exact quotient has no exponent below this
    const int shift_floor = min_exp() - divisor.min_exp();
    const int dlead = divisor.max_exp();
    LaurentPoly rem = *this, quot;
    while (!rem.is_zero()) {
        int shift = rem.max_exp() - dlead;
        if (shift < shift_floor) throw InternalError("divided_exact: nonzero remainder");
        BigInt c = rem.terms_.rbegin()->second;
        if (lead.sign() < 0) c = -c;
        quot.add_term(shift, c);
        rem -= divisor.scaled(c, shift);
    }
    return quot;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int exp = it->first;
        const BigInt& c = it->second;
        const bool neg = c.sign() < 0;
        BigInt mag = neg ? -c : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        const bool unit_coeff = mag.is_one();
        if (!unit_coeff || exp == 0) s += mag.to_string();
        if (exp != 0) {
            if (!unit_coeff) s += "*";
            s += "t";
            if (exp != 1) s += "^" + std::to_string(exp);
        }
    }
    return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    LaurentPoly p;
    std::string tok;
    int pending_sign = 1;
    bool saw_any = false;
    while (in >> tok) {
        if (tok == "+") {
            pending_sign = 1;
            continue;
        }
        if (tok == "-") {
            pending_sign = -1;
            continue;
        }
        // term forms: C, C*t, C*t^K, t, t^K, -C..., -t...
        int sign = pending_sign;
        pending_sign = 1;
        std::string term = tok;
        if (!term.empty() && term[0] == '-') {
            sign = -sign;
            term = term.substr(1);
        }
        std::string coeff_part = term, t_part;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff_part = term.substr(0, star);
            t_part = term.substr(star + 1);
        } else if (!term.empty() && term[0] == 't') {
            coeff_part = "1";
            t_part = term;
        }
        BigInt c = BigInt::from_string(coeff_part);
        if (sign < 0) c = -c;
        int exp = 0;
        if (!t_part.empty()) {
            if (t_part == "t") {
                exp = 1;
            } else if (t_part.rfind("t^", 0) == 0) {
                exp = std::stoi(t_part.substr(2));
            } else {
                throw ParamError("bad polynomial term '" + tok + "'");
            }
        }
        p.add_term(exp, c);
        saw_any = true;
    }
    if (!saw_any) throw ParamError("empty polynomial text");
    return p;
}

}  // namespace braidforge
