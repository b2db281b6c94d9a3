#include "vw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vw {

double SymMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
    return worst;
}

namespace linalg {

namespace {

double off_diagonal_norm(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymMatrix m, double off_tol, int max_sweeps) {
    const int n = m.n;
    if (n == 0) return {};
    if (n == 1) return {m.at(0, 0)};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(m) < off_tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double app = m.at(p, p);
                const double aqq = m.at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                // stable tangent of the rotation angle
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = m.at(i, p);
                    const double aiq = m.at(i, q);
                    m.at(i, p) = c * aip - s * aiq;
                    m.at(p, i) = m.at(i, p);
                    m.at(i, q) = s * aip + c * aiq;
                    m.at(q, i) = m.at(i, q);
                }
            }
        }
    }
    if (off_diagonal_norm(m) >= off_tol)
        throw std::runtime_error("jacobi_eigenvalues: did not reach off-diagonal tolerance");

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m.at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

void householder_tridiagonalize(SymMatrix& m, std::vector<double>& diag, std::vector<double>& off) {
    const int n = m.n;
    diag.assign(n, 0.0);
    off.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return;
    if (n == 1) {
        diag[0] = m.at(0, 0);
        return;
    }

    // EISPACK tred1-style reduction, eigenvalues only.
    std::vector<double> d(n), e(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(m.at(i, k));
            if (scale == 0.0) {
                e[i] = m.at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    m.at(i, k) /= scale;
                    h += m.at(i, k) * m.at(i, k);
                }
                double f = m.at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                m.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += m.at(j, k) * m.at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += m.at(k, j) * m.at(i, k);
                    e[j] = g / h;
                    f += e[j] * m.at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = m.at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        m.at(j, k) -= f * e[k] + g * m.at(i, k);
                }
            }
        } else {
            e[i] = m.at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = m.at(i, i);

    for (int i = 0; i < n; ++i) diag[i] = d[i];
    for (int i = 1; i < n; ++i) off[i - 1] = e[i];
}

std::vector<double> ql_tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> off) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    std::vector<double> e(n, 0.0);
    for (int i = 1; i < n; ++i) e[i - 1] = off[i - 1];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int split;
        do {
            for (split = l; split < n - 1; ++split) {
                const double dd = std::abs(d[split]) + std::abs(d[split + 1]);
                if (std::abs(e[split]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (split != l) {
                if (++iter == 60)
                    throw std::runtime_error("ql_tridiagonal_eigenvalues: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[split] - d[l] + e[l] / (g + (g >= 0.0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = split - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[split] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[split] = 0.0;
            }
        } while (split != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                      double sigma) {
    const int n = static_cast<int>(diag.size());
    int count = 0;
    double q = 1.0;
    const double tiny = std::numeric_limits<double>::min() * 4.0;
    for (int i = 0; i < n; ++i) {
        const double off2 = (i == 0) ? 0.0 : off[i - 1] * off[i - 1];
        q = diag[i] - sigma - (i == 0 ? 0.0 : off2 / q);
        if (q == 0.0) q = -tiny;
        if (std::abs(q) < tiny) q = (q < 0.0) ? -tiny : tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> sturm_tridiagonal_eigenvalues(const std::vector<double>& diag,
                                                  const std::vector<double>& off, int k,
                                                  double abs_tol) {
    const int n = static_cast<int>(diag.size());
    if (k < 1) throw std::invalid_argument("sturm_tridiagonal_eigenvalues: k must be >= 1");
    if (k > n) throw std::invalid_argument("sturm_tridiagonal_eigenvalues: k exceeds matrix size");
    if (static_cast<int>(off.size()) != std::max(0, n - 1))
        throw std::invalid_argument("sturm_tridiagonal_eigenvalues: inconsistent arrays");

    // Gershgorin bounds.
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    std::vector<double> ev(k);
    for (int idx = 1; idx <= k; ++idx) {
        double a = lo, b = hi;
        while (b - a > abs_tol) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;  // hit floating-point resolution
            if (sturm_count_below(diag, off, mid) >= idx)
                b = mid;
            else
                a = mid;
        }
        ev[idx - 1] = 0.5 * (a + b);
    }
    return ev;
}

LeastSquaresFit qr_least_squares(const std::vector<std::vector<double>>& design,
                                 const std::vector<double>& rhs) {
    const int rows = static_cast<int>(design.size());
    if (rows == 0) throw std::invalid_argument("qr_least_squares: empty design");
    const int cols = static_cast<int>(design[0].size());
    if (rows < cols) throw std::invalid_argument("qr_least_squares: underdetermined system");
    if (static_cast<int>(rhs.size()) != rows)
        throw std::invalid_argument("qr_least_squares: rhs size mismatch");

    // Column equilibration keeps the Vandermonde columns comparable.
    std::vector<double> colscale(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s = std::max(s, std::abs(design[i][j]));
        colscale[j] = (s > 0.0) ? s : 1.0;
    }

    std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = design[i][j] / colscale[j];
    std::vector<double> b = rhs;

    // Householder QR applied to [a | b].
    for (int j = 0; j < cols; ++j) {
        double norm = 0.0;
        for (int i = j; i < rows; ++i) norm += a[i][j] * a[i][j];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::runtime_error("qr_least_squares: rank-deficient design");
        if (a[j][j] > 0.0) norm = -norm;
        std::vector<double> v(rows, 0.0);
        for (int i = j; i < rows; ++i) v[i] = a[i][j];
        v[j] -= norm;
        double vtv = 0.0;
        for (int i = j; i < rows; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        for (int col = j; col < cols; ++col) {
            double dot = 0.0;
            for (int i = j; i < rows; ++i) dot += v[i] * a[i][col];
            const double f = 2.0 * dot / vtv;
            for (int i = j; i < rows; ++i) a[i][col] -= f * v[i];
        }
        double dotb = 0.0;
        for (int i = j; i < rows; ++i) dotb += v[i] * b[i];
        const double fb = 2.0 * dotb / vtv;
        for (int i = j; i < rows; ++i) b[i] -= fb * v[i];
    }

    LeastSquaresFit fit;
    fit.coefficients.assign(cols, 0.0);
    for (int j = cols - 1; j >= 0; --j) {
        double s = b[j];
        for (int col = j + 1; col < cols; ++col) s -= a[j][col] * fit.coefficients[col];
        fit.coefficients[j] = s / a[j][j];
    }
    for (int j = 0; j < cols; ++j) fit.coefficients[j] /= colscale[j];

    double res = 0.0;
    for (int i = cols; i < rows; ++i) res += b[i] * b[i];
    fit.residual_norm = std::sqrt(res);

    double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < cols; ++j) {
        rmax = std::max(rmax, std::abs(a[j][j]));
        rmin = std::min(rmin, std::abs(a[j][j]));
    }
    fit.condition_estimate = (rmin > 0.0) ? rmax / rmin : std::numeric_limits<double>::infinity();
    return fit;
}

}  // namespace linalg
}  // namespace vw
