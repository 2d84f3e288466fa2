#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cylf/error.hpp"

namespace cylf {

// Dense linear algebra over a prime field F_p (p <= 97) and the bar
// decompositions of nilpotent cyclic-quiver representations, interval
// decompositions of linear-quiver representations, and 2-periodic complexes.

struct Matrix {
    int rows = 0, cols = 0;
    unsigned p = 2;
    std::vector<unsigned> a;  // row-major, values in [0,p)

    Matrix() = default;
    Matrix(int r, int c, unsigned p_);
    static Matrix identity(int n, unsigned p);

    unsigned& at(int r, int c) { return a[(size_t)r * cols + c]; }
    unsigned at(int r, int c) const { return a[(size_t)r * cols + c]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    Matrix operator-() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    int rank() const;
    // reduced row echelon form; returns pivot columns
    Matrix rref(std::vector<int>* pivots = nullptr) const;
    // basis of the kernel / column space, as matrices whose columns are the basis
    Matrix kernel_basis() const;
    Matrix image_basis() const;
    Matrix inverse() const;  // requires square invertible
    Matrix transpose() const;
    // horizontal concatenation
    static Matrix hcat(const Matrix& x, const Matrix& y);
    // columns of y that extend the column space of x (greedy, left to right)
    static Matrix column_complement(const Matrix& x, const Matrix& y);
    // solve x * s = b for s (b in the column space; least pivot solution)
    Matrix solve(const Matrix& b) const;
};

struct CyclicQuiverRep {
    int n = 1;           // vertex count, arrows i -> i+1 (mod n)
    unsigned p = 2;
    std::vector<int> dims;
    std::vector<Matrix> arrows;  // arrows[i]: dims[(i+1)%n] x dims[i]

    int total_dim() const;
    void check() const;  // shape consistency; throws BadParams
};

struct BarClass {
    int start = 0;   // vertex where the bar begins
    int length = 1;  // number of propagation steps to annihilate
    int shift = 0;   // Z/2 homological shift, used by periodic contexts

    bool operator<(const BarClass& o) const {
        if (start != o.start) return start < o.start;
        if (length != o.length) return length < o.length;
        return shift < o.shift;
    }
    bool operator==(const BarClass& o) const {
        return start == o.start && length == o.length && shift == o.shift;
    }
};

using BarMultiset = std::map<BarClass, int>;

bool is_nilpotent(const CyclicQuiverRep& r);

// Length-filtration decomposition of a nilpotent representation into bars;
// the multiset is independent of the complement choices. Throws
// Error("NotNilpotent").
BarMultiset decompose_nilpotent_cyclic(const CyclicQuiverRep& r);

// Interval (barcode) decomposition of a linear A_n representation
// (arrows[n-1] must be the zero map of shape dims[0] x dims[n-1], or n==1
// with a nilpotent... use make below). Here we take a rep given by n vertex
// dims and n-1 arrows.
struct LinearQuiverRep {
    unsigned p = 2;
    std::vector<int> dims;
    std::vector<Matrix> arrows;  // arrows[i]: dims[i+1] x dims[i], i < n-1
};

BarMultiset decompose_linear(const LinearQuiverRep& r);

struct PeriodicComplex {
    CyclicQuiverRep even, odd;
    std::vector<Matrix> d0;  // per vertex: odd.dims[i] x even.dims[i]
    std::vector<Matrix> d1;  // per vertex: even.dims[i] x odd.dims[i]

    void check() const;  // shapes, d^2 = 0, commutation with arrows
};

std::pair<CyclicQuiverRep, CyclicQuiverRep> periodic_cohomology(const PeriodicComplex& c);

// decompose_nilpotent_cyclic of both cohomologies, with shifts 0 and 1.
// Throws Error("NonNilpotentCohomology").
BarMultiset decompose_periodic(const PeriodicComplex& c);

CyclicQuiverRep make_bar(int n, unsigned p, int start, int length);
CyclicQuiverRep direct_sum(const CyclicQuiverRep& a, const CyclicQuiverRep& b);
// seeded vertex-wise invertible matrices (unit-triangular products times a
// permutation)
std::vector<Matrix> random_invertibles(const std::vector<int>& dims, unsigned p, uint64_t seed);
// base change by seeded invertible vertex-wise matrices; isomorphism class
// is preserved
CyclicQuiverRep conjugate_random(const CyclicQuiverRep& r, uint64_t seed);

// rep file format helpers (JSON; see README)
std::string serialize_rep(const CyclicQuiverRep& r);
CyclicQuiverRep parse_rep(const std::string& text);
std::string serialize_complex(const PeriodicComplex& c);
PeriodicComplex parse_complex(const std::string& text);
std::string bars_to_string(const BarMultiset& m);

}  // namespace cylf
