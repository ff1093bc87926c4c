#include "dimerkit/polyring.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dimerkit {

LaurentPoly LaurentPoly::constant(int vars, const mpz_class& c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms[Monomial(vars, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::term(int vars, const Monomial& e, const mpz_class& c) {
    if ((int)e.size() != vars) throw std::invalid_argument("term: exponent length mismatch");
    LaurentPoly p(vars);
    if (c != 0) p.terms[e] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int idx) {
    Monomial e(vars, 0);
    e[idx] = 1;
    return term(vars, e, 1);
}

void LaurentPoly::add_term(const Monomial& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

static void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars != b.vars) throw std::invalid_argument("polynomials over different rings");
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_ring(a, b);
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

LaurentPoly poly_neg(const LaurentPoly& a) {
    LaurentPoly r(a.vars);
    for (const auto& [e, c] : a.terms) r.terms[e] = -c;
    return r;
}

LaurentPoly poly_sub(const LaurentPoly& a, const LaurentPoly& b) {
    return poly_add(a, poly_neg(b));
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_ring(a, b);
    LaurentPoly r(a.vars);
    Monomial e(a.vars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.vars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool poly_equal(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars == b.vars && a.terms == b.terms;
}

LaurentPoly poly_det(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("poly_det: matrix not square");
    int n = m.rows;
    if (n > 20) throw std::invalid_argument("poly_det: matrix too large");
    if (n == 0) return LaurentPoly::constant(0, 1);
    int vars = m.at(0, 0).vars;
    // det of the submatrix given by rows popcount(mask)..n-1 and columns in mask
    std::unordered_map<uint32_t, LaurentPoly> memo;
    auto rec = [&](auto&& self, uint32_t mask) -> const LaurentPoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int row = n - __builtin_popcount(mask);
        LaurentPoly acc(vars);
        if (mask == 0) {
            acc = LaurentPoly::constant(vars, 1);
        } else {
            int sign = 1;
            for (int c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                const LaurentPoly& entry = m.at(row, c);
                if (!entry.is_zero()) {
                    LaurentPoly sub = poly_mul(entry, self(self, mask & ~(1u << c)));
                    acc = (sign > 0) ? poly_add(acc, sub) : poly_sub(acc, sub);
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    return rec(rec, full);
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_ring(a, b);
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    LaurentPoly rem = a;
    LaurentPoly quot(a.vars);
    const Monomial blead_e = b.terms.rbegin()->first; // lex-largest term of b
    const mpz_class blead_c = b.terms.rbegin()->second;
    Monomial e(a.vars);
    while (!rem.is_zero()) {
        const Monomial rlead_e = rem.terms.rbegin()->first;
        const mpz_class rlead_c = rem.terms.rbegin()->second;
        for (int i = 0; i < a.vars; ++i) e[i] = rlead_e[i] - blead_e[i];
        mpz_class q = rlead_c / blead_c;
        if (q * blead_c != rlead_c)
            throw std::domain_error("poly_divexact: not divisible");
        quot.add_term(e, q);
        rem = poly_sub(rem, poly_mul(b, LaurentPoly::term(a.vars, e, q)));
        if (!rem.is_zero() && rem.terms.rbegin()->first >= rlead_e)
            throw std::domain_error("poly_divexact: not divisible");
    }
    return quot;
}

mpz_class poly_content(const LaurentPoly& a) {
    mpz_class g = 0;
    for (const auto& [e, c] : a.terms) {
        mpz_class ac = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ac.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Monomial poly_monomial_content(const LaurentPoly& a) {
    Monomial mc(a.vars, 0);
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        if (first) { mc = e; first = false; continue; }
        for (int i = 0; i < a.vars; ++i) mc[i] = std::min(mc[i], e[i]);
    }
    return mc;
}

LaurentPoly poly_invert_vars(const LaurentPoly& a) {
    LaurentPoly r(a.vars);
    Monomial e(a.vars);
    for (const auto& [ea, c] : a.terms) {
        for (int i = 0; i < a.vars; ++i) e[i] = -ea[i];
        r.terms[e] = c;
    }
    return r;
}

LaurentPoly poly_shift(const LaurentPoly& a, const Monomial& e, const mpz_class& c) {
    LaurentPoly r(a.vars);
    Monomial f(a.vars);
    for (const auto& [ea, ca] : a.terms) {
        for (int i = 0; i < a.vars; ++i) f[i] = ea[i] + e[i];
        r.add_term(f, ca * c);
    }
    return r;
}

LaurentPoly poly_restrict_vars(const LaurentPoly& a, int vars) {
    LaurentPoly r(vars);
    for (const auto& [e, c] : a.terms) {
        for (int i = vars; i < a.vars; ++i)
            if (e[i] != 0) throw std::invalid_argument("poly_restrict_vars: variable in use");
        r.terms[Monomial(e.begin(), e.begin() + vars)] = c;
    }
    return r;
}

LaurentPoly poly_set_tail_to_one(const LaurentPoly& a, int keep) {
    LaurentPoly r(keep);
    Monomial e(keep);
    for (const auto& [ea, c] : a.terms) {
        for (int i = 0; i < keep; ++i) e[i] = ea[i];
        r.add_term(e, c);
    }
    return r;
}

std::string poly_format(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << mag.get_str() << "*u^[";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << "]";
    }
    return os.str();
}

LaurentPoly poly_parse(const std::string& text, int vars) {
    LaurentPoly p(vars);
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
    skip_ws();
    if (text.compare(pos, 1, "0") == 0 && pos + 1 >= text.size()) return p;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+') { sign = 1; ++pos; skip_ws(); }
        else if (text[pos] == '-') { sign = -1; ++pos; skip_ws(); }
        size_t start = pos;
        while (pos < text.size() && (isdigit((unsigned char)text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("poly_parse: expected coefficient");
        mpz_class c(text.substr(start, pos - start));
        c *= sign;
        skip_ws();
        if (pos + 4 > text.size() || text.compare(pos, 4, "*u^[") != 0)
            throw std::invalid_argument("poly_parse: expected '*u^['");
        pos += 4;
        Monomial e;
        while (true) {
            skip_ws();
            size_t s2 = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
            e.push_back(std::stoi(text.substr(s2, pos - s2)));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            if (pos < text.size() && text[pos] == ']') { ++pos; break; }
            throw std::invalid_argument("poly_parse: bad exponent list");
        }
        if ((int)e.size() != vars)
            throw std::invalid_argument("poly_parse: exponent length mismatch");
        p.add_term(e, c);
        sign = 1;
        skip_ws();
    }
    return p;
}

} // namespace dimerkit
