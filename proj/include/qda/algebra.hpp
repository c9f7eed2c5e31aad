#pragma once
// Words and finitely supported polynomials of the free unital algebra on
// N generators, with the multidegree grading.  Generators are 1-indexed.

#include <map>
#include <vector>

#include "qda/scalar.hpp"

namespace qda {

// A word in the generators; empty = the unit.
using Word = std::vector<int>;

// Per-generator letter counts.
using MultiDegree = std::vector<int>;

MultiDegree multidegree(const Word& w, int n_generators);
inline int total_degree(const MultiDegree& d) {
    int s = 0;
    for (int c : d) s += c;
    return s;
}

// Basis order: total degree, then lex on the degree vector, then lex on
// the letter sequence.  Every matrix in the engine is indexed this way.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const;
};

// All words of the given multidegree, ascending in WordOrder.
std::vector<Word> word_basis(const MultiDegree& d);

// Multinomial |d|! / prod d_i!, the size of word_basis(d).
unsigned long block_dimension(const MultiDegree& d);

class FreePoly {
  public:
    using TermMap = std::map<Word, Scalar, WordOrder>;

    explicit FreePoly(const BackendSpec& backend) : backend_(backend) {}
    static FreePoly zero(const BackendSpec& backend) { return FreePoly(backend); }
    static FreePoly unit(const BackendSpec& backend);
    static FreePoly generator(int i, const BackendSpec& backend);
    static FreePoly from_word(const Word& w, const BackendSpec& backend);

    const BackendSpec& backend() const { return backend_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    Scalar coeff(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);  // accumulates, drops zeros

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly operator*(const FreePoly& o) const;  // concatenation product
    FreePoly operator*(const Scalar& c) const;
    bool operator==(const FreePoly& o) const;
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);

    // Restriction of the support to one multidegree.
    FreePoly component(const MultiDegree& d, int n_generators) const;
    // Coefficient of the empty word, the projection ( )_0.
    Scalar projection_0() const;
    // Distinct multidegrees in the support.
    std::vector<MultiDegree> support_degrees(int n_generators) const;
    // True if all terms share one multidegree (zero counts as homogeneous).
    bool is_homogeneous(int n_generators, MultiDegree* deg_out = nullptr) const;

    // Coefficient vector over word_basis(d); terms outside the block are
    // an error.
    std::vector<Scalar> coefficient_vector(const MultiDegree& d) const;
    static FreePoly from_coefficient_vector(const std::vector<Scalar>& v, const MultiDegree& d,
                                            const BackendSpec& backend);

  private:
    void check_compatible(const FreePoly& o) const;
    BackendSpec backend_;
    TermMap terms_;
};

}  // namespace qda
