#include "qda/derivations.hpp"

#include <sstream>

namespace qda {

FreePoly apply_partial(int i, const FreePoly& p, const ParamSpec& params) {
    if (i < 1 || i > params.n_generators()) throw Error("derivation index out of range");
    FreePoly r(p.backend());
    for (const auto& [w, c] : p.terms()) {
        Scalar twist = params.one();
        for (size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] == i) {
                Word rest;
                rest.reserve(w.size() - 1);
                rest.insert(rest.end(), w.begin(), w.begin() + pos);
                rest.insert(rest.end(), w.begin() + pos + 1, w.end());
                r.add_term(rest, c * twist);
            }
            twist *= params.q(i, w[pos]);
        }
    }
    return r;
}

FreePoly apply_right_partial(int i, const FreePoly& p, const ParamSpec& params) {
    if (i < 1 || i > params.n_generators()) throw Error("derivation index out of range");
    FreePoly r(p.backend());
    for (const auto& [w, c] : p.terms()) {
        Scalar twist = params.one();
        for (size_t pos = w.size(); pos-- > 0;) {
            if (w[pos] == i) {
                Word rest;
                rest.reserve(w.size() - 1);
                rest.insert(rest.end(), w.begin(), w.begin() + pos);
                rest.insert(rest.end(), w.begin() + pos + 1, w.end());
                r.add_term(rest, c * twist);
            }
            twist *= params.q(w[pos], i);
        }
    }
    return r;
}

FreePoly q_bracket(const FreePoly& a, const FreePoly& b, const Scalar& alpha) {
    return a * b - (b * a) * alpha;
}

void OperatorPoly::add_term(const Word& dword, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(dword, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorPoly OperatorPoly::operator+(const OperatorPoly& o) const {
    OperatorPoly r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

OperatorPoly OperatorPoly::operator*(const OperatorPoly& o) const {
    OperatorPoly r(backend_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

OperatorPoly OperatorPoly::operator*(const Scalar& c) const {
    OperatorPoly r(backend_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : terms_) r.add_term(w, cw * c);
    return r;
}

OperatorPoly hat_map(const FreePoly& p) {
    OperatorPoly op(p.backend());
    for (const auto& [w, c] : p.terms()) op.add_term(w, c);
    return op;
}

FreePoly operator_apply(const OperatorPoly& op, const FreePoly& x, const ParamSpec& params) {
    FreePoly r(x.backend());
    for (const auto& [dword, c] : op.terms()) {
        FreePoly y = x;
        for (size_t k = dword.size(); k-- > 0;) {  // rightmost partial first
            y = apply_partial(dword[k], y, params);
            if (y.is_zero()) break;
        }
        r += y * c;
    }
    return r;
}

bool operator_is_zero(const OperatorPoly& op, const ParamSpec& params) {
    if (op.is_zero()) return true;
    const int n = params.n_generators();
    MultiDegree d = multidegree(op.terms().begin()->first, n);
    for (const auto& [w, c] : op.terms())
        if (multidegree(w, n) != d) throw Error("operator_is_zero: non-homogeneous operator");
    for (const Word& w : word_basis(d)) {
        FreePoly x = FreePoly::from_word(w, op.backend());
        if (!operator_apply(op, x, params).is_zero()) return false;
    }
    return true;
}

FreePoly apply_K(int i, KSign sign, const FreePoly& p, const ParamSpec& params) {
    FreePoly r(p.backend());
    const int n = params.n_generators();
    for (const auto& [w, c] : p.terms()) {
        MultiDegree d = multidegree(w, n);
        Scalar factor = sign == KSign::upper ? params.kappa_upper(i, d) : params.kappa_lower(i, d);
        r.add_term(w, c * factor);
    }
    return r;
}

FreePoly apply_e(int i, const FreePoly& p) {
    return FreePoly::generator(i, p.backend()) * p;
}

FreePoly apply_f(int i, const FreePoly& p, const ParamSpec& params) {
    const int n = params.n_generators();
    FreePoly r(p.backend());
    for (const auto& [w, c] : p.terms()) {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            if (w[pos] != i) continue;
            Word rest;
            rest.reserve(w.size() - 1);
            rest.insert(rest.end(), w.begin(), w.begin() + pos);
            rest.insert(rest.end(), w.begin() + pos + 1, w.end());
            MultiDegree tail = multidegree(Word(w.begin() + pos + 1, w.end()), n);
            Scalar factor = params.kappa_lower(i, tail) - params.kappa_upper(i, tail);
            r.add_term(rest, c * factor);
        }
    }
    return r;
}

namespace {

using Op = std::function<FreePoly(const FreePoly&)>;

FreePoly commutator(const Op& a, const Op& b, const FreePoly& x) {
    return a(b(x)) - b(a(x));
}

}  // namespace

RelationReport verify_ef_relations(const ParamSpec& params, int degree_bound) {
    RelationReport rep;
    const int n = params.n_generators();
    auto fail = [&](const std::string& what, const Word& w) {
        rep.ok = false;
        std::ostringstream os;
        os << what << " fails on word (";
        for (size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
        os << ")";
        rep.failures.push_back(os.str());
    };

    std::vector<Word> words;
    words.push_back({});
    for (int deg = 1; deg <= degree_bound; ++deg) {
        std::vector<Word> next;
        for (const auto& w : words) {
            if (static_cast<int>(w.size()) != deg - 1) continue;
            for (int i = 1; i <= n; ++i) {
                Word v = w;
                v.push_back(i);
                next.push_back(v);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Op Kui = [&, i](const FreePoly& x) { return apply_K(i, KSign::upper, x, params); };
            Op Kli = [&, i](const FreePoly& x) { return apply_K(i, KSign::lower, x, params); };
            Op Kuj = [&, j](const FreePoly& x) { return apply_K(j, KSign::upper, x, params); };
            Op Klj = [&, j](const FreePoly& x) { return apply_K(j, KSign::lower, x, params); };
            Op ej = [&, j](const FreePoly& x) { return apply_e(j, x); };
            Op fj = [&, j](const FreePoly& x) { return apply_f(j, x, params); };
            for (const auto& w : words) {
                FreePoly x = FreePoly::from_word(w, params.backend());
                if (!commutator(Kli, Klj, x).is_zero()) fail("[K_i,K_j]", w);
                if (!commutator(Kli, Kuj, x).is_zero()) fail("[K_i,K^j]", w);
                if (!commutator(Kui, Kuj, x).is_zero()) fail("[K^i,K^j]", w);
                // K^i e_j = q_ij e_j K^i and K_i e_j = q_ji^{-1} e_j K_i
                if (Kui(ej(x)) != ej(Kui(x)) * params.q(i, j)) fail("K^i e_j", w);
                if (Kli(ej(x)) != ej(Kli(x)) * params.q(j, i).inverse()) fail("K_i e_j", w);
                // K^i f_j = q_ij^{-1} f_j K^i and K_i f_j = q_ji f_j K_i
                if (Kui(fj(x)) != fj(Kui(x)) * params.q(i, j).inverse()) fail("K^i f_j", w);
                if (Kli(fj(x)) != fj(Kli(x)) * params.q(j, i)) fail("K_i f_j", w);
                // [e_i, f_j] = delta_ij (K^i - K_i)
                Op ei = [&, i](const FreePoly& x2) { return apply_e(i, x2); };
                FreePoly lhs = commutator(ei, fj, x);
                FreePoly rhs(params.backend());
                if (i == j) rhs = Kui(x) - Kli(x);
                if (lhs != rhs) fail("[e_i,f_j]", w);
            }
        }
    }
    return rep;
}

}  // namespace qda
