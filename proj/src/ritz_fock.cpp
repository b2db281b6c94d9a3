#include "vw/ritz_fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vw {

namespace {

// General banded matrix, all 2*hb+1 diagonals stored: entry(i, j) for |i-j| <= hb.
struct Banded {
    int n = 0;
    int hb = 0;
    std::vector<double> data;  // data[i * (2 hb + 1) + (j - i + hb)]

    Banded(int size, int halfband)
        : n(size), hb(halfband), data(static_cast<std::size_t>(size) * (2 * halfband + 1), 0.0) {}

    double get(int i, int j) const {
        if (std::abs(i - j) > hb) return 0.0;
        return data[static_cast<std::size_t>(i) * (2 * hb + 1) + (j - i + hb)];
    }
    void set(int i, int j, double v) {
        data[static_cast<std::size_t>(i) * (2 * hb + 1) + (j - i + hb)] = v;
    }
};

Banded banded_multiply(const Banded& a, const Banded& b) {
    Banded c(a.n, a.hb + b.hb);
    for (int i = 0; i < a.n; ++i) {
        const int jlo = std::max(0, i - c.hb);
        const int jhi = std::min(a.n - 1, i + c.hb);
        for (int j = jlo; j <= jhi; ++j) {
            const int klo = std::max({0, i - a.hb, j - b.hb});
            const int khi = std::min({a.n - 1, i + a.hb, j + b.hb});
            double s = 0.0;
            for (int k = klo; k <= khi; ++k) s += a.get(i, k) * b.get(k, j);
            c.set(i, j, s);
        }
    }
    return c;
}

// Adds the leading dense.n x dense.n block of the band, symmetrized so that
// roundoff in the band products cannot leave H asymmetric.
void banded_axpy(SymMatrix& dense, const Banded& b, double coeff) {
    for (int i = 0; i < dense.n; ++i) {
        const int jhi = std::min(dense.n - 1, i + b.hb);
        for (int j = i; j <= jhi; ++j) {
            const double v = 0.5 * (b.get(i, j) + b.get(j, i));
            dense.at(i, j) += coeff * v;
            if (j != i) dense.at(j, i) = dense.at(i, j);
        }
    }
}

Banded position_banded(int n) {
    Banded x(n, 1);
    for (int i = 0; i + 1 < n; ++i) {
        const double v = std::sqrt(0.5 * (i + 1));
        x.set(i, i + 1, v);
        x.set(i + 1, i, v);
    }
    return x;
}

constexpr int kJacobiCutoff = 128;

}  // namespace

SymMatrix position_matrix(int truncation) {
    if (truncation < 2) throw std::invalid_argument("position_matrix: truncation must be >= 2");
    SymMatrix x(truncation);
    for (int i = 0; i + 1 < truncation; ++i) {
        const double v = std::sqrt(0.5 * (i + 1));
        x.at(i, i + 1) = v;
        x.at(i + 1, i) = v;
    }
    return x;
}

RitzMatrices hamiltonian_matrix(const ModelSpec& model, int truncation) {
    const int half_power =
        model.family == PotentialFamily::Power2n ? model.power
        : model.family == PotentialFamily::Harmonic ? 0
                                                    : 2;
    if (truncation < 2 || truncation < 2 * half_power)
        throw std::invalid_argument("hamiltonian_matrix: truncation too small for x^" +
                                    std::to_string(2 * half_power));

    RitzMatrices out;
    out.size = truncation;
    out.model = model;
    out.H = SymMatrix(truncation);
    for (int i = 0; i < truncation; ++i) out.H.at(i, i) = i + 0.5;

    if (model.family == PotentialFamily::Harmonic) return out;

    // The powers are formed on an extended basis and cropped to N x N, which
    // makes every retained entry the exact projected matrix element. A power
    // of the N-truncated operator instead loses the return paths through
    // states >= N, undershoots the projected diagonal in the corner rows, and
    // breaks the Ritz upper-bound property at small N.
    const Banded x = position_banded(truncation + 2 * half_power);
    const Banded x2 = banded_multiply(x, x);
    switch (model.family) {
    case PotentialFamily::Quartic: {
        banded_axpy(out.H, banded_multiply(x2, x2), model.lambda);
        break;
    }
    case PotentialFamily::CubicQuartic: {
        banded_axpy(out.H, banded_multiply(x2, x), model.lambda);
        banded_axpy(out.H, banded_multiply(x2, x2), model.mu);
        break;
    }
    case PotentialFamily::Power2n: {
        Banded xp = x2;
        for (int p = 2; p <= model.power; ++p) xp = banded_multiply(xp, x2);
        banded_axpy(out.H, xp, model.lambda);
        break;
    }
    default: break;
    }
    return out;
}

std::vector<double> symmetric_eigen(const SymMatrix& m, int k) {
    if (k < 1 || k > m.n) throw std::invalid_argument("symmetric_eigen: k out of range");
    double scale = 1.0;
    for (double v : m.a) scale = std::max(scale, std::abs(v));
    if (m.max_asymmetry() > 1e-12 * scale)
        throw std::invalid_argument("symmetric_eigen: matrix not symmetric");

    std::vector<double> all;
    if (m.n <= kJacobiCutoff) {
        all = linalg::jacobi_eigenvalues(m);
    } else {
        SymMatrix work = m;
        std::vector<double> diag, off;
        linalg::householder_tridiagonalize(work, diag, off);
        all = linalg::ql_tridiagonal_eigenvalues(std::move(diag), std::move(off));
    }
    all.resize(k);
    return all;
}

SpectrumResult ritz_spectrum(const ModelSpec& model, int truncation, int k) {
    if (k > truncation) throw std::invalid_argument("ritz_spectrum: k exceeds truncation");
    const RitzMatrices rm = hamiltonian_matrix(model, truncation);
    SpectrumResult s;
    s.model = model;
    s.truncation = truncation;
    s.k = k;
    s.values = symmetric_eigen(rm.H, k);
    return s;
}

SpectrumResult converged_spectrum(const ModelSpec& model, int k, double tol) {
    if (tol < 1e-12) throw std::invalid_argument("converged_spectrum: tol must be >= 1e-12");
    SpectrumResult out;
    out.model = model;
    out.k = k;

    int n = 32;
    while (n < 2 * k + 16) n *= 2;
    std::vector<double> prev = ritz_spectrum(model, n, k).values;
    out.history.emplace_back(n, prev);

    while (n < 4096) {
        n *= 2;
        std::vector<double> cur = ritz_spectrum(model, n, k).values;
        out.history.emplace_back(n, cur);
        double worst = 0.0;
        for (int i = 0; i < k; ++i) worst = std::max(worst, std::abs(cur[i] - prev[i]));
        if (worst < tol) {
            out.truncation = n;
            out.values = std::move(cur);
            return out;
        }
        prev = std::move(cur);
    }
    std::string msg = "converged_spectrum: no convergence at N=4096; history:";
    for (const auto& [nn, vals] : out.history)
        msg += " N=" + std::to_string(nn) + " E0=" + std::to_string(vals[0]);
    throw std::runtime_error(msg);
}

Json to_json(const SpectrumResult& s) {
    Json j = Json::object();
    j.set("model", to_json(s.model));
    j.set("N", s.truncation);
    j.set("k", s.k);
    Json vals = Json::array();
    for (double v : s.values) vals.push(v);
    j.set("values", std::move(vals));
    Json hist = Json::array();
    for (const auto& [n, values] : s.history) {
        Json h = Json::object();
        h.set("N", n);
        Json hv = Json::array();
        for (double v : values) hv.push(v);
        h.set("values", std::move(hv));
        hist.push(std::move(h));
    }
    j.set("history", std::move(hist));
    return j;
}

}  // namespace vw
