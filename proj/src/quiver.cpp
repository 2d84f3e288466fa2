#include "cylf/quiver.hpp"

#include <algorithm>
#include <cassert>

#include "json.hpp"

namespace cylf {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned inv_mod(unsigned a, unsigned p) {
    // p is a small prime
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return (unsigned)((t % p + p) % p);
}

struct SplitMix {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    unsigned below(unsigned m) { return m ? (unsigned)(next() % m) : 0; }
};

}  // namespace

Matrix::Matrix(int r, int c, unsigned p_) : rows(r), cols(c), p(p_), a((size_t)r * c, 0) {
    if (!is_prime(p_) || p_ > 97) throw Error("BadParams", "field order must be a prime <= 97");
}

Matrix Matrix::identity(int n, unsigned p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows && x.p == y.p);
    Matrix r(x.rows, y.cols, x.p);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            unsigned v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols && x.p == y.p);
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % x.p;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& v : r.a) v = (p - v) % p;
    return r;
}

bool Matrix::is_zero() const {
    for (unsigned v : a)
        if (v) return false;
    return true;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
    Matrix m = *this;
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        unsigned inv = inv_mod(m.at(r, c), m.p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = (m.at(r, j) * inv) % m.p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !m.at(i, c)) continue;
            unsigned f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(r, j)) % m.p;
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int Matrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return (int)piv.size();
}

Matrix Matrix::kernel_basis() const {
    std::vector<int> piv;
    Matrix e = rref(&piv);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    int free_cnt = cols - (int)piv.size();
    Matrix k(cols, free_cnt, p);
    int fc = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        k.at(c, fc) = 1;
        for (int r = 0; r < (int)piv.size(); ++r) {
            unsigned v = e.at(r, c);
            if (v) k.at(piv[r], fc) = (p - v) % p;
        }
        ++fc;
    }
    return k;
}

Matrix Matrix::image_basis() const {
    std::vector<int> piv;
    rref(&piv);
    Matrix im(rows, (int)piv.size(), p);
    for (int j = 0; j < (int)piv.size(); ++j)
        for (int i = 0; i < rows; ++i) im.at(i, j) = at(i, piv[j]);
    return im;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::hcat(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.p == y.p);
    Matrix r(x.rows, x.cols + y.cols, x.p);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Matrix Matrix::column_complement(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows);
    Matrix acc = x;
    Matrix out(y.rows, 0, y.p);
    int base = acc.rank();
    for (int j = 0; j < y.cols; ++j) {
        Matrix col(y.rows, 1, y.p);
        for (int i = 0; i < y.rows; ++i) col.at(i, 0) = y.at(i, j);
        Matrix trial = hcat(acc, col);
        if (trial.rank() > base) {
            acc = trial;
            ++base;
            out = hcat(out, col);
        }
    }
    return out;
}

Matrix Matrix::inverse() const {
    assert(rows == cols);
    if (rows == 0) return *this;
    Matrix aug = hcat(*this, identity(rows, p));
    std::vector<int> piv;
    Matrix e = aug.rref(&piv);
    if ((int)piv.size() != rows || piv[rows - 1] != rows - 1)
        throw Error("BadParams", "matrix not invertible");
    Matrix inv(rows, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) inv.at(i, j) = e.at(i, rows + j);
    return inv;
}

Matrix Matrix::solve(const Matrix& b) const {
    assert(rows == b.rows);
    Matrix aug = hcat(*this, b);
    std::vector<int> piv;
    Matrix e = aug.rref(&piv);
    for (int c : piv)
        if (c >= cols) throw Error("BadParams", "solve: rhs not in column space");
    Matrix s(cols, b.cols, p);
    for (int r = 0; r < (int)piv.size(); ++r)
        for (int j = 0; j < b.cols; ++j) s.at(piv[r], j) = e.at(r, cols + j);
    return s;
}

// ---------------------------------------------------------------------------

int CyclicQuiverRep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

void CyclicQuiverRep::check() const {
    if (n < 1 || (int)dims.size() != n || (int)arrows.size() != n)
        throw Error("BadParams", "cyclic rep: bad shape");
    for (int i = 0; i < n; ++i) {
        if (arrows[i].rows != dims[(i + 1) % n] || arrows[i].cols != dims[i] || arrows[i].p != p)
            throw Error("BadParams", "cyclic rep: arrow " + std::to_string(i) + " has wrong shape");
    }
}

bool is_nilpotent(const CyclicQuiverRep& r) {
    r.check();
    int total = r.total_dim();
    if (total == 0) return true;
    for (int i = 0; i < r.n; ++i) {
        if (r.dims[i] == 0) continue;
        // one full loop based at i
        Matrix loop = Matrix::identity(r.dims[i], r.p);
        for (int s = 0; s < r.n; ++s) loop = r.arrows[(i + s) % r.n] * loop;
        // nilpotency of the loop endomorphism
        Matrix pw = loop;
        for (int e = 1; e < r.dims[i] && !pw.is_zero(); ++e) pw = loop * pw;
        if (!pw.is_zero()) return false;
    }
    return true;
}

namespace {

// composite of l propagation steps starting at vertex i
Matrix propagate(const CyclicQuiverRep& r, int i, int l) {
    Matrix m = Matrix::identity(r.dims[i], r.p);
    for (int s = 0; s < l; ++s) m = r.arrows[(i + s) % r.n] * m;
    return m;
}

}  // namespace

BarMultiset decompose_nilpotent_cyclic(const CyclicQuiverRep& r) {
    r.check();
    if (!is_nilpotent(r)) throw Error("NotNilpotent", "representation has a local-system summand");
    BarMultiset out;
    if (r.total_dim() == 0) return out;

    // length filtration: K[i][l] = kernel of the l-step propagation from i
    int maxlen = 0;
    std::vector<std::vector<Matrix>> K(r.n);
    for (int i = 0; i < r.n; ++i) {
        K[i].push_back(Matrix(r.dims[i], 0, r.p));  // l = 0
        int l = 1;
        while (true) {
            Matrix ker = propagate(r, i, l).kernel_basis();
            K[i].push_back(ker);
            if (ker.cols == r.dims[i]) break;  // full: everything dies in l steps
            ++l;
            if (l > r.total_dim() + r.n) throw Error("NotNilpotent", "filtration did not stabilize");
        }
        maxlen = std::max(maxlen, (int)K[i].size() - 1);
    }

    // accumulated footprints of already chosen bars, per vertex
    std::vector<Matrix> psi;
    for (int i = 0; i < r.n; ++i) psi.push_back(Matrix(r.dims[i], 0, r.p));

    for (int m = maxlen; m >= 1; --m) {
        for (int i = 0; i < r.n; ++i) {
            if ((int)K[i].size() <= m) continue;
            const Matrix& W = K[i][m];
            const Matrix& lower = K[i][m - 1];
            Matrix U = Matrix::hcat(lower, psi[i]);
            Matrix chosen = Matrix::column_complement(U, W);
            for (int j = 0; j < chosen.cols; ++j) {
                Matrix v(r.dims[i], 1, r.p);
                for (int t = 0; t < r.dims[i]; ++t) v.at(t, 0) = chosen.at(t, j);
                out[BarClass{i, m, 0}]++;
                // orbit v, Pv, ..., P^{m-1}v feeds the footprint
                Matrix cur = v;
                for (int s = 0; s < m; ++s) {
                    int vtx = (i + s) % r.n;
                    psi[vtx] = Matrix::hcat(psi[vtx], cur);
                    cur = r.arrows[vtx] * cur;
                }
            }
        }
    }

    // dimension accounting: bar footprints must reproduce dims exactly
    std::vector<int> acct(r.n, 0);
    for (auto& [bar, mult] : out)
        for (int s = 0; s < bar.length; ++s) acct[(bar.start + s) % r.n] += mult;
    for (int i = 0; i < r.n; ++i)
        if (acct[i] != r.dims[i]) throw Error("NotNilpotent", "bar footprints do not account for dims");
    return out;
}

BarMultiset decompose_linear(const LinearQuiverRep& r) {
    int n = (int)r.dims.size();
    if (n == 0) return {};
    if ((int)r.arrows.size() != n - 1) throw Error("BadParams", "linear rep: arrow count");
    for (int i = 0; i + 1 < n; ++i)
        if (r.arrows[i].rows != r.dims[i + 1] || r.arrows[i].cols != r.dims[i])
            throw Error("BadParams", "linear rep: arrow shape");
    // rank of the composite V_s -> V_e
    auto rk = [&](int s, int e) -> int {
        if (s < 0 || e >= n || s > e) return 0;
        Matrix m = Matrix::identity(r.dims[s], r.p);
        for (int i = s; i < e; ++i) m = r.arrows[i] * m;
        return m.rank();
    };
    BarMultiset out;
    for (int s = 0; s < n; ++s)
        for (int e = s; e < n; ++e) {
            int mult = rk(s, e) - rk(s - 1, e) - rk(s, e + 1) + rk(s - 1, e + 1);
            if (mult < 0) throw Error("BadParams", "linear rep: negative multiplicity");
            if (mult > 0) out[BarClass{s, e - s + 1, 0}] += mult;
        }
    return out;
}

// ---------------------------------------------------------------------------

void PeriodicComplex::check() const {
    even.check();
    odd.check();
    if (even.n != odd.n || even.p != odd.p) throw Error("BadParams", "complex: mismatched reps");
    int n = even.n;
    if ((int)d0.size() != n || (int)d1.size() != n) throw Error("BadParams", "complex: differential count");
    for (int i = 0; i < n; ++i) {
        if (d0[i].rows != odd.dims[i] || d0[i].cols != even.dims[i])
            throw Error("BadParams", "complex: d0 shape at vertex " + std::to_string(i));
        if (d1[i].rows != even.dims[i] || d1[i].cols != odd.dims[i])
            throw Error("BadParams", "complex: d1 shape at vertex " + std::to_string(i));
        if (!(d1[i] * d0[i]).is_zero() || !(d0[i] * d1[i]).is_zero())
            throw Error("BadParams", "complex: d^2 != 0 at vertex " + std::to_string(i));
        int j = (i + 1) % n;
        if (!(d0[j] * even.arrows[i] + (-(odd.arrows[i] * d0[i]))).is_zero())
            throw Error("BadParams", "complex: d0 does not commute with arrows at " + std::to_string(i));
        if (!(d1[j] * odd.arrows[i] + (-(even.arrows[i] * d1[i]))).is_zero())
            throw Error("BadParams", "complex: d1 does not commute with arrows at " + std::to_string(i));
    }
}

namespace {

// cohomology rep at one parity: H_i = ker(dA_i) / im(dB_i), with arrows of
// `amb` inducing the maps
CyclicQuiverRep cohomology_rep(const CyclicQuiverRep& amb, const std::vector<Matrix>& dA,
                               const std::vector<Matrix>& dB) {
    int n = amb.n;
    CyclicQuiverRep h;
    h.n = n;
    h.p = amb.p;
    h.dims.resize(n);
    std::vector<Matrix> reps;    // chosen coset representatives (columns)
    std::vector<Matrix> images;  // im dB basis
    for (int i = 0; i < n; ++i) {
        Matrix ker = dA[i].kernel_basis();
        Matrix im = dB[i].image_basis();
        Matrix rep = Matrix::column_complement(im, ker);
        h.dims[i] = rep.cols;
        reps.push_back(rep);
        images.push_back(im);
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        Matrix mapped = amb.arrows[i] * reps[i];  // columns live in ker(dA_j)
        Matrix basis = Matrix::hcat(reps[j], images[j]);
        Matrix sol = basis.cols ? basis.solve(mapped) : Matrix(0, mapped.cols, amb.p);
        Matrix ind(h.dims[j], h.dims[i], amb.p);
        for (int rr = 0; rr < h.dims[j]; ++rr)
            for (int cc = 0; cc < h.dims[i]; ++cc) ind.at(rr, cc) = sol.cols ? sol.at(rr, cc) : 0;
        h.arrows.push_back(ind);
    }
    // arrows were built with index i mapping vertex i -> i+1 in order
    return h;
}

}  // namespace

std::pair<CyclicQuiverRep, CyclicQuiverRep> periodic_cohomology(const PeriodicComplex& c) {
    c.check();
    CyclicQuiverRep heven = cohomology_rep(c.even, c.d0, c.d1);
    CyclicQuiverRep hodd = cohomology_rep(c.odd, c.d1, c.d0);
    return {heven, hodd};
}

BarMultiset decompose_periodic(const PeriodicComplex& c) {
    auto [he, ho] = periodic_cohomology(c);
    if (!is_nilpotent(he) || !is_nilpotent(ho))
        throw Error("NonNilpotentCohomology", "cohomology has a local-system summand");
    BarMultiset out;
    for (auto& [bar, mult] : decompose_nilpotent_cyclic(he)) out[BarClass{bar.start, bar.length, 0}] += mult;
    for (auto& [bar, mult] : decompose_nilpotent_cyclic(ho)) out[BarClass{bar.start, bar.length, 1}] += mult;
    return out;
}

// ---------------------------------------------------------------------------

CyclicQuiverRep make_bar(int n, unsigned p, int start, int length) {
    if (n < 1 || length < 1 || start < 0 || start >= n) throw Error("BadParams", "make_bar: out of range");
    CyclicQuiverRep r;
    r.n = n;
    r.p = p;
    r.dims.assign(n, 0);
    std::vector<std::vector<int>> slots(n);  // slot indices per vertex, in order
    for (int l = 0; l < length; ++l) {
        int v = (start + l) % n;
        slots[v].push_back(l);
        r.dims[v]++;
    }
    for (int v = 0; v < n; ++v) {
        int w = (v + 1) % n;
        Matrix m(r.dims[w], r.dims[v], p);
        for (int cv = 0; cv < (int)slots[v].size(); ++cv) {
            int l = slots[v][cv];
            if (l + 1 >= length) continue;
            for (int cw = 0; cw < (int)slots[w].size(); ++cw)
                if (slots[w][cw] == l + 1) m.at(cw, cv) = 1;
        }
        r.arrows.push_back(m);
    }
    r.check();
    return r;
}

CyclicQuiverRep direct_sum(const CyclicQuiverRep& a, const CyclicQuiverRep& b) {
    a.check();
    b.check();
    if (a.n != b.n || a.p != b.p) throw Error("BadParams", "direct_sum: mismatched reps");
    CyclicQuiverRep r;
    r.n = a.n;
    r.p = a.p;
    for (int i = 0; i < a.n; ++i) r.dims.push_back(a.dims[i] + b.dims[i]);
    for (int i = 0; i < a.n; ++i) {
        int j = (i + 1) % a.n;
        Matrix m(r.dims[j], r.dims[i], r.p);
        for (int rr = 0; rr < a.dims[j]; ++rr)
            for (int cc = 0; cc < a.dims[i]; ++cc) m.at(rr, cc) = a.arrows[i].at(rr, cc);
        for (int rr = 0; rr < b.dims[j]; ++rr)
            for (int cc = 0; cc < b.dims[i]; ++cc) m.at(a.dims[j] + rr, a.dims[i] + cc) = b.arrows[i].at(rr, cc);
        r.arrows.push_back(m);
    }
    return r;
}

std::vector<Matrix> random_invertibles(const std::vector<int>& dims, unsigned p, uint64_t seed) {
    SplitMix rng{seed ^ 0xa5c1e1ull};
    std::vector<Matrix> g;
    for (int d : dims) {
        // unit lower x unit upper x row permutation: always invertible
        Matrix lo = Matrix::identity(d, p), up = Matrix::identity(d, p), pm(d, d, p);
        for (int rr = 0; rr < d; ++rr)
            for (int cc = 0; cc < rr; ++cc) lo.at(rr, cc) = rng.below(p);
        for (int rr = 0; rr < d; ++rr)
            for (int cc = rr + 1; cc < d; ++cc) up.at(rr, cc) = rng.below(p);
        std::vector<int> perm(d);
        for (int k = 0; k < d; ++k) perm[k] = k;
        for (int k = d - 1; k > 0; --k) std::swap(perm[k], perm[rng.below((unsigned)(k + 1))]);
        for (int k = 0; k < d; ++k) pm.at(perm[k], k) = 1;
        g.push_back(pm * lo * up);
    }
    return g;
}

CyclicQuiverRep conjugate_random(const CyclicQuiverRep& r, uint64_t seed) {
    r.check();
    std::vector<Matrix> g = random_invertibles(r.dims, r.p, seed);
    CyclicQuiverRep out = r;
    for (int i = 0; i < r.n; ++i) {
        int j = (i + 1) % r.n;
        out.arrows[i] = g[j] * r.arrows[i] * g[i].inverse();
    }
    return out;
}

// ---------------------------------------------------------------------------
// file formats

namespace {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, unsigned p) {
    Matrix m(rows, cols, p);
    if ((int)j.size() != rows) throw Error("ParseError", "matrix row count");
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) throw Error("ParseError", "matrix column count");
        for (int c = 0; c < cols; ++c) {
            long long v = j[i][c].get<long long>();
            if (v < 0 || v >= (long long)p) throw Error("ParseError", "matrix entry out of range mod p");
            m.at(i, c) = (unsigned)v;
        }
    }
    return m;
}

}  // namespace

std::string serialize_rep(const CyclicQuiverRep& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["dims"] = r.dims;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& m : r.arrows) j["arrows"].push_back(matrix_to_json(m));
    return j.dump(2) + "\n";
}

CyclicQuiverRep parse_rep(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw Error("ParseError", std::string("bad JSON: ") + ex.what());
    }
    CyclicQuiverRep r;
    try {
        r.n = j.at("n").get<int>();
        r.p = j.at("p").get<unsigned>();
        r.dims = j.at("dims").get<std::vector<int>>();
        for (int i = 0; i < r.n; ++i)
            r.arrows.push_back(matrix_from_json(j.at("arrows").at(i), r.dims[(i + 1) % r.n], r.dims[i], r.p));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error("ParseError", std::string("rep: ") + ex.what());
    }
    r.check();
    return r;
}

std::string serialize_complex(const PeriodicComplex& c) {
    nlohmann::ordered_json j;
    j["even"] = nlohmann::json::parse(serialize_rep(c.even));
    j["odd"] = nlohmann::json::parse(serialize_rep(c.odd));
    j["d0"] = nlohmann::ordered_json::array();
    j["d1"] = nlohmann::ordered_json::array();
    for (const auto& m : c.d0) j["d0"].push_back(matrix_to_json(m));
    for (const auto& m : c.d1) j["d1"].push_back(matrix_to_json(m));
    return j.dump(2) + "\n";
}

PeriodicComplex parse_complex(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw Error("ParseError", std::string("bad JSON: ") + ex.what());
    }
    PeriodicComplex c;
    try {
        c.even = parse_rep(j.at("even").dump());
        c.odd = parse_rep(j.at("odd").dump());
        for (int i = 0; i < c.even.n; ++i) {
            c.d0.push_back(matrix_from_json(j.at("d0").at(i), c.odd.dims[i], c.even.dims[i], c.even.p));
            c.d1.push_back(matrix_from_json(j.at("d1").at(i), c.even.dims[i], c.odd.dims[i], c.even.p));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error("ParseError", std::string("complex: ") + ex.what());
    }
    c.check();
    return c;
}

std::string bars_to_string(const BarMultiset& m) {
    std::string s;
    for (auto& [bar, mult] : m) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(bar.start) + "," + std::to_string(bar.length);
        if (bar.shift) s += ",s1";
        s += ")x" + std::to_string(mult);
    }
    return s.empty() ? "(empty)" : s;
}

}  // namespace cylf
