#include "qda/hochschild.hpp"

#include <algorithm>

namespace qda {

void Chain::add_term(const std::vector<Word>& t, const Scalar& c) {
    if (static_cast<int>(t.size()) != arity_) throw Error("chain arity mismatch");
    if (c.is_zero()) return;
    for (const auto& w : t)
        if (w.empty()) throw Error("chain entries must have degree >= 1");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Chain Chain::operator+(const Chain& o) const {
    if (arity_ != o.arity_) throw Error("chain arity mismatch");
    Chain r(*this);
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

Chain Chain::operator*(const Scalar& c) const {
    Chain r(arity_, backend_);
    for (const auto& [t, cw] : terms_) r.add_term(t, cw * c);
    return r;
}

Chain Chain::tensor(const std::vector<FreePoly>& factors) {
    if (factors.empty()) throw Error("empty tensor");
    Chain r(static_cast<int>(factors.size()), factors[0].backend());
    std::vector<Word> t(factors.size());
    Scalar acc = Scalar::one(factors[0].backend());
    auto rec = [&](auto&& self, size_t pos, const Scalar& coeff) -> void {
        if (pos == factors.size()) {
            r.add_term(t, coeff);
            return;
        }
        for (const auto& [w, c] : factors[pos].terms()) {
            t[pos] = w;
            self(self, pos + 1, coeff * c);
        }
    };
    rec(rec, 0, acc);
    return r;
}

Chain hochschild_boundary(const Chain& c) {
    if (c.arity() < 2) return Chain(std::max(1, c.arity() - 1), c.backend());
    Chain r(c.arity() - 1, c.backend());
    for (const auto& [t, coeff] : c.terms()) {
        for (int i = 0; i + 1 < c.arity(); ++i) {
            std::vector<Word> merged;
            merged.reserve(t.size() - 1);
            for (int k = 0; k < i; ++k) merged.push_back(t[k]);
            Word join = t[i];
            join.insert(join.end(), t[i + 1].begin(), t[i + 1].end());
            merged.push_back(join);
            for (size_t k = i + 2; k < t.size(); ++k) merged.push_back(t[k]);
            r.add_term(merged, i % 2 == 0 ? coeff : -coeff);
        }
    }
    return r;
}

void Cochain::set(const std::vector<Word>& t, const FreePoly& value) {
    if (static_cast<int>(t.size()) != arity_) throw Error("cochain arity mismatch");
    if (value.is_zero())
        table_.erase(t);
    else
        table_.insert_or_assign(t, value);
}

FreePoly Cochain::evaluate(const std::vector<Word>& t) const {
    auto it = table_.find(t);
    if (it == table_.end()) return FreePoly(backend_);
    return it->second;
}

FreePoly Cochain::evaluate(const Chain& c) const {
    if (c.arity() != arity_) throw Error("cochain arity mismatch");
    FreePoly acc(backend_);
    for (const auto& [t, coeff] : c.terms()) acc += evaluate(t) * coeff;
    return acc;
}

namespace {

FreePoly pi_action(const Word& a, const FreePoly& v, const ParamSpec& params) {
    FreePoly y = v;
    for (size_t k = a.size(); k-- > 0;) {
        y = apply_partial(a[k], y, params);
        if (y.is_zero()) break;
    }
    return y;
}

}  // namespace

FreePoly hochschild_coboundary(const Cochain& tau, const Chain& a, const ParamSpec& params) {
    if (a.arity() != tau.arity() + 1) throw Error("coboundary arity mismatch");
    FreePoly acc(a.backend());
    for (const auto& [t, coeff] : a.terms()) {
        if (tau.arity() == 0) {
            // d tau (a_1) = pi(a_1) tau, tau a fixed value.
            acc += pi_action(t[0], tau.evaluate(std::vector<Word>{}), params) * coeff;
            continue;
        }
        std::vector<Word> rest(t.begin() + 1, t.end());
        acc += pi_action(t[0], tau.evaluate(rest), params) * coeff;
    }
    acc -= tau.evaluate(hochschild_boundary(a));
    return acc;
}

FreePoly hochschild_coboundary_squared(const Cochain& tau, const Chain& a,
                                       const ParamSpec& params) {
    if (a.arity() != tau.arity() + 2) throw Error("coboundary arity mismatch");
    // d(d tau)(a) = pi(a_1)(d tau)(a_(2...)) - (d tau)(boundary a)
    FreePoly acc(a.backend());
    for (const auto& [t, coeff] : a.terms()) {
        Chain rest(a.arity() - 1, a.backend());
        rest.add_term(std::vector<Word>(t.begin() + 1, t.end()), Scalar::one(a.backend()));
        acc += pi_action(t[0], hochschild_coboundary(tau, rest, params), params) * coeff;
    }
    acc -= hochschild_coboundary(tau, hochschild_boundary(a), params);
    return acc;
}

FreePoly PForm::value(const std::vector<int>& idx, const BackendSpec& backend) const {
    auto it = values.find(idx);
    if (it == values.end()) return FreePoly(backend);
    return it->second;
}

Chain chain_normal_form(const Chain& c, BlockCache& cache) {
    Chain out(c.arity(), c.backend());
    for (const auto& [t, coeff] : c.terms()) {
        std::vector<FreePoly> factors;
        for (const auto& w : t)
            factors.push_back(cache.normal_form(FreePoly::from_word(w, c.backend())));
        out = out + Chain::tensor(factors) * coeff;
    }
    return out;
}

FreePoly serre_cochain_d(const PForm& z, const Chain& a, const ParamSpec& params,
                         int arity_bound) {
    if (z.arity > arity_bound) throw Error("p-form arity above the configured bound");
    if (a.arity() != z.arity + 1) throw Error("chain arity mismatch");
    BlockCache cache(params);
    if (!chain_normal_form(hochschild_boundary(a), cache).is_zero())
        throw Error("chain is not closed");
    FreePoly acc(a.backend());
    for (const auto& [t, coeff] : a.terms()) {
        std::vector<int> idx;
        for (size_t k = 1; k < t.size(); ++k) {
            if (t[k].size() != 1) throw Error("tail entries must be single generators");
            idx.push_back(t[k][0]);
        }
        FreePoly zv = z.value(idx, a.backend());
        if (!zv.is_zero()) acc += pi_action(t[0], zv, params) * coeff;
    }
    return acc;
}

bool pform_is_strongly_closed(const PForm& z, const ParamSpec& params, int degree_bound) {
    const int n = params.n_generators();
    // Enumerate constants of every multidegree with total degree in
    // [2, degree_bound]; contract each into the first slot of z.
    std::vector<MultiDegree> degs;
    {
        MultiDegree cur(n, 0);
        for (;;) {
            int tot = total_degree(cur);
            if (tot >= 2 && tot <= degree_bound) degs.push_back(cur);
            size_t k = 0;
            while (k < cur.size()) {
                if (cur[k] < degree_bound) {
                    ++cur[k];
                    break;
                }
                cur[k] = 0;
                ++k;
            }
            if (k == cur.size()) break;
        }
    }
    // All (p-1)-tuples of generator indices.
    std::vector<std::vector<int>> tails{{}};
    for (int pos = 1; pos < z.arity; ++pos) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tails)
            for (int i = 1; i <= n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(u);
            }
        tails = std::move(next);
    }
    for (const auto& d : degs) {
        ConstantBasis cb = find_constants(d, params);
        for (const auto& c : cb.basis) {
            for (const auto& tail : tails) {
                FreePoly acc(params.backend());
                for (const auto& [w, coeff] : c.terms()) {
                    std::vector<int> idx{w.back()};
                    idx.insert(idx.end(), tail.begin(), tail.end());
                    FreePoly zv = z.value(idx, params.backend());
                    if (zv.is_zero()) continue;
                    Word head(w.begin(), w.end() - 1);
                    acc += pi_action(head, zv, params) * coeff;
                }
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace qda
