#include "qda/algebra.hpp"

#include <algorithm>

namespace qda {

MultiDegree multidegree(const Word& w, int n_generators) {
    MultiDegree d(n_generators, 0);
    for (int letter : w) {
        if (letter < 1 || letter > n_generators) throw Error("generator index out of range");
        ++d[letter - 1];
    }
    return d;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    // Same length: compare degree vectors lexicographically.  Counts are
    // compared letter by letter up to the largest letter present.
    int maxl = 0;
    for (int x : a) maxl = std::max(maxl, x);
    for (int x : b) maxl = std::max(maxl, x);
    for (int letter = 1; letter <= maxl; ++letter) {
        int ca = static_cast<int>(std::count(a.begin(), a.end(), letter));
        int cb = static_cast<int>(std::count(b.begin(), b.end(), letter));
        if (ca != cb) return ca < cb;
    }
    return a < b;
}

std::vector<Word> word_basis(const MultiDegree& d) {
    Word sorted;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw Error("negative multidegree");
        sorted.insert(sorted.end(), d[i], static_cast<int>(i + 1));
    }
    std::vector<Word> words;
    if (sorted.empty()) {
        words.push_back({});
        return words;
    }
    do {
        words.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return words;  // next_permutation emits lexicographic order
}

unsigned long block_dimension(const MultiDegree& d) {
    unsigned long n = 0;
    for (int c : d) n += c;
    // n! / prod d_i!, computed without overflow at desk scale
    mpz_class r(1);
    for (unsigned long k = 2; k <= n; ++k) r *= k;
    for (int c : d)
        for (int k = 2; k <= c; ++k) r /= k;
    return r.get_ui();
}

FreePoly FreePoly::unit(const BackendSpec& backend) {
    FreePoly p(backend);
    p.terms_.emplace(Word{}, Scalar::one(backend));
    return p;
}

FreePoly FreePoly::generator(int i, const BackendSpec& backend) {
    if (i < 1) throw Error("generator index out of range");
    FreePoly p(backend);
    p.terms_.emplace(Word{i}, Scalar::one(backend));
    return p;
}

FreePoly FreePoly::from_word(const Word& w, const BackendSpec& backend) {
    FreePoly p(backend);
    p.terms_.emplace(w, Scalar::one(backend));
    return p;
}

Scalar FreePoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) return Scalar::zero(backend_);
    return it->second;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FreePoly::check_compatible(const FreePoly& o) const {
    if (!(backend_ == o.backend_)) throw Error("free polynomial backend mismatch");
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    check_compatible(o);
    FreePoly r(*this);
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly r(*this);
    r -= o;
    return r;
}

FreePoly FreePoly::operator-() const {
    FreePoly r(backend_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
    check_compatible(o);
    FreePoly r(backend_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

FreePoly FreePoly::operator*(const Scalar& c) const {
    FreePoly r(backend_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : terms_) r.terms_.emplace(w, cw * c);
    return r;
}

bool FreePoly::operator==(const FreePoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

FreePoly FreePoly::component(const MultiDegree& d, int n_generators) const {
    FreePoly r(backend_);
    for (const auto& [w, c] : terms_)
        if (multidegree(w, n_generators) == d) r.terms_.emplace(w, c);
    return r;
}

Scalar FreePoly::projection_0() const { return coeff(Word{}); }

std::vector<MultiDegree> FreePoly::support_degrees(int n_generators) const {
    std::vector<MultiDegree> degs;
    for (const auto& [w, c] : terms_) {
        MultiDegree d = multidegree(w, n_generators);
        if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    return degs;
}

bool FreePoly::is_homogeneous(int n_generators, MultiDegree* deg_out) const {
    auto degs = support_degrees(n_generators);
    if (degs.size() > 1) return false;
    if (deg_out && degs.size() == 1) *deg_out = degs[0];
    return true;
}

std::vector<Scalar> FreePoly::coefficient_vector(const MultiDegree& d) const {
    auto basis = word_basis(d);
    std::vector<Scalar> v(basis.size(), Scalar::zero(backend_));
    size_t found = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != terms_.size()) throw Error("polynomial has terms outside the block");
    return v;
}

FreePoly FreePoly::from_coefficient_vector(const std::vector<Scalar>& v, const MultiDegree& d,
                                           const BackendSpec& backend) {
    auto basis = word_basis(d);
    if (v.size() != basis.size()) throw Error("coefficient vector size mismatch");
    FreePoly p(backend);
    for (size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
}

}  // namespace qda
