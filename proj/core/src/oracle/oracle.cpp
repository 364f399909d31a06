#include "mpns/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpns::oracle {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_small(int n, int cap, const char* what) {
    if (n > cap) throw std::invalid_argument(std::string(what) + ": n too large for oracle");
    if (n < 2) throw std::invalid_argument(std::string(what) + ": n too small");
}

// Storage index of integer mode (mx, my, mz); modes outside the lattice
// return -1.
long mode_index(int mx, int my, int mz, int n) {
    const int lo = -n / 2 + 1, hi = n / 2;
    if (mx < lo || mx > hi || my < lo || my > hi || mz < lo || mz > hi) return -1;
    const int jx = mx >= 0 ? mx : mx + n;
    const int jy = my >= 0 ? my : my + n;
    const int jz = mz >= 0 ? mz : mz + n;
    return (static_cast<long>(jz) * n + jy) * n + jx;
}

}  // namespace

std::vector<Complex> naive_dft(const std::vector<double>& samples, int n) {
    require_small(n, 16, "naive_dft");
    if (std::ssize(samples) != static_cast<long>(n) * n * n)
        throw std::invalid_argument("naive_dft: sample count mismatch");
    std::vector<Complex> out(samples.size());
    const double norm = 1.0 / (static_cast<double>(n) * n * n);
    for (int jz = 0; jz < n; ++jz)
        for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx) {
                Complex acc{};
                for (int z = 0; z < n; ++z)
                    for (int y = 0; y < n; ++y)
                        for (int x = 0; x < n; ++x) {
                            const double phase =
                                -kTwoPi *
                                (static_cast<double>(jx) * x + static_cast<double>(jy) * y +
                                 static_cast<double>(jz) * z) /
                                n;
                            acc += samples[(static_cast<long>(z) * n + y) * n + x] *
                                   Complex{std::cos(phase), std::sin(phase)};
                        }
                out[(static_cast<long>(jz) * n + jy) * n + jx] = acc * norm;
            }
    return out;
}

std::vector<double> naive_idft(const std::vector<Complex>& modes, int n) {
    require_small(n, 16, "naive_idft");
    std::vector<double> out(modes.size());
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                Complex acc{};
                for (int jz = 0; jz < n; ++jz)
                    for (int jy = 0; jy < n; ++jy)
                        for (int jx = 0; jx < n; ++jx) {
                            const double phase =
                                kTwoPi *
                                (static_cast<double>(jx) * x + static_cast<double>(jy) * y +
                                 static_cast<double>(jz) * z) /
                                n;
                            acc += modes[(static_cast<long>(jz) * n + jy) * n + jx] *
                                   Complex{std::cos(phase), std::sin(phase)};
                        }
                out[(static_cast<long>(z) * n + y) * n + x] = acc.real();
            }
    return out;
}

std::vector<Complex> direct_convolution(const std::vector<Complex>& fhat,
                                        const std::vector<Complex>& ghat, int n) {
    require_small(n, 16, "direct_convolution");
    if (fhat.size() != ghat.size() ||
        std::ssize(fhat) != static_cast<long>(n) * n * n)
        throw std::invalid_argument("direct_convolution: size mismatch");
    std::vector<Complex> out(fhat.size(), Complex{});
    const int lo = -n / 2 + 1, hi = n / 2;
    for (int az = lo; az <= hi; ++az)
        for (int ay = lo; ay <= hi; ++ay)
            for (int ax = lo; ax <= hi; ++ax) {
                const Complex fa = fhat[mode_index(ax, ay, az, n)];
                if (fa == Complex{}) continue;
                for (int bz = lo; bz <= hi; ++bz)
                    for (int by = lo; by <= hi; ++by)
                        for (int bx = lo; bx <= hi; ++bx) {
                            const Complex gb = ghat[mode_index(bx, by, bz, n)];
                            if (gb == Complex{}) continue;
                            const long target = mode_index(ax + bx, ay + by, az + bz, n);
                            if (target >= 0) out[target] += fa * gb;
                        }
            }
    return out;
}

double direct_ball_integral(const std::vector<double>& samples, int n, double box_length,
                            std::array<int, 3> center, double radius, double p) {
    require_small(n, 512, "direct_ball_integral");
    if (!(p > 0.0)) throw std::invalid_argument("direct_ball_integral: p must be positive");
    const double h = box_length / n;
    const double cell = h * h * h;
    double acc = 0.0;
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                int dx = std::abs(x - center[0]);
                int dy = std::abs(y - center[1]);
                int dz = std::abs(z - center[2]);
                dx = std::min(dx, n - dx);
                dy = std::min(dy, n - dy);
                dz = std::min(dz, n - dz);
                const double d2 = (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy +
                                   static_cast<double>(dz) * dz) *
                                  h * h;
                if (d2 <= radius * radius)
                    acc += std::pow(std::abs(samples[(static_cast<long>(z) * n + y) * n + x]), p);
            }
    return std::pow(acc * cell, 1.0 / p);
}

double dense_level_sweep(const std::vector<double>& samples, int n, double box_length,
                         double p, int levels) {
    if (levels < 1 || levels > 100000)
        throw std::invalid_argument("dense_level_sweep: levels out of range");
    if (!(p > 1.0)) throw std::invalid_argument("dense_level_sweep: p must exceed 1");
    double fmax = 0.0;
    for (double v : samples) fmax = std::max(fmax, std::abs(v));
    if (fmax == 0.0) return 0.0;
    const double cell = std::pow(box_length / n, 3.0);
    double best = 0.0;
    for (int i = 1; i <= levels; ++i) {
        const double level = fmax * i / levels;
        long count = 0;
        for (double v : samples)
            if (std::abs(v) > level) ++count;
        // the sup over R in (level_{i-1}, level_i] is approached at the top
        // of the interval, where the count is that of the open level below
        long count_ge = 0;
        for (double v : samples)
            if (std::abs(v) >= level) ++count_ge;
        best = std::max(best, level * std::pow(count * cell, 1.0 / p));
        best = std::max(best, level * std::pow(count_ge * cell, 1.0 / p));
    }
    return best;
}

LinearModeSystem make_linear_mode_system(const std::array<double, 3>& k) {
    LinearModeSystem sys;
    sys.k = k;
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    // Leray projector P = I - k k^T / |k|^2 (identity at k = 0).
    std::array<std::array<double, 3>, 3> proj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            proj[i][j] = (i == j ? 1.0 : 0.0) - (k2 > 0.0 ? k[i] * k[j] / k2 : 0.0);
    // curl as i k x (.): (ik x v)_i = i eps_{ijl} k_j v_l
    std::array<std::array<Complex, 3>, 3> crl{};
    const Complex im{0.0, 1.0};
    crl[0][1] = -im * k[2];
    crl[0][2] = im * k[1];
    crl[1][0] = im * k[2];
    crl[1][2] = -im * k[0];
    crl[2][0] = -im * k[1];
    crl[2][1] = im * k[0];

    auto& m = sys.matrix;
    for (int i = 0; i < 3; ++i) {
        m[i][i] += -k2;  // diffusion on u
        for (int j = 0; j < 3; ++j) {
            // u couples to w through P (i k x w)
            Complex c{};
            for (int l = 0; l < 3; ++l) c += proj[i][l] * crl[l][j];
            m[i][3 + j] += c;
            // w couples to u through i k x u
            m[3 + i][j] += crl[i][j];
            // grad div w -> -k (k . w)
            m[3 + i][3 + j] += -k[i] * k[j];
        }
        m[3 + i][3 + i] += -k2 - 2.0;  // diffusion and angular damping on w
    }
    return sys;
}

namespace {

using Mat6 = std::array<std::array<Complex, 6>, 6>;

Mat6 identity6() {
    Mat6 m{};
    for (int i = 0; i < 6; ++i) m[i][i] = 1.0;
    return m;
}

Mat6 mul(const Mat6& a, const Mat6& b) {
    Mat6 out{};
    for (int i = 0; i < 6; ++i)
        for (int l = 0; l < 6; ++l) {
            const Complex ail = a[i][l];
            if (ail == Complex{}) continue;
            for (int j = 0; j < 6; ++j) out[i][j] += ail * b[l][j];
        }
    return out;
}

Mat6 add_scaled(const Mat6& a, const Mat6& b, Complex s) {
    Mat6 out = a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out[i][j] += s * b[i][j];
    return out;
}

// Gaussian elimination with partial pivoting, solving A X = B.
Mat6 solve(Mat6 a, Mat6 b) {
    for (int col = 0; col < 6; ++col) {
        int piv = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Complex d = a[col][col];
        for (int j = 0; j < 6; ++j) {
            a[col][j] /= d;
            b[col][j] /= d;
        }
        for (int r = 0; r < 6; ++r) {
            if (r == col) continue;
            const Complex f = a[r][col];
            if (f == Complex{}) continue;
            for (int j = 0; j < 6; ++j) {
                a[r][j] -= f * a[col][j];
                b[r][j] -= f * b[col][j];
            }
        }
    }
    return b;
}

double norm_inf(const Mat6& m) {
    double best = 0.0;
    for (int i = 0; i < 6; ++i) {
        double row = 0.0;
        for (int j = 0; j < 6; ++j) row += std::abs(m[i][j]);
        best = std::max(best, row);
    }
    return best;
}

}  // namespace

std::array<std::array<Complex, 6>, 6> matrix_exponential(const LinearModeSystem& sys,
                                                         double t) {
    Mat6 a = sys.matrix;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i][j] *= t;

    int squarings = 0;
    double nrm = norm_inf(a);
    while (nrm > 0.5) {
        nrm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) a[i][j] *= scale;

    // Pade(6,6): exp(A) ~ Q^{-1} P with P = sum c_j A^j (odd/even split).
    static constexpr double c[7] = {1.0,       0.5,        5.0 / 44.0, 1.0 / 66.0,
                                    1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
    Mat6 a2 = mul(a, a);
    Mat6 even = identity6();
    even = add_scaled(even, a2, c[2]);
    Mat6 a4 = mul(a2, a2);
    even = add_scaled(even, a4, c[4]);
    Mat6 a6 = mul(a4, a2);
    even = add_scaled(even, a6, c[6]);
    Mat6 oddc = identity6();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            oddc[i][j] = c[1] * (i == j ? 1.0 : 0.0);
    oddc = add_scaled(oddc, a2, c[3]);
    oddc = add_scaled(oddc, a4, c[5]);
    Mat6 odd = mul(a, oddc);

    Mat6 p = add_scaled(even, odd, 1.0);
    Mat6 q = add_scaled(even, odd, -1.0);
    Mat6 r = solve(q, p);
    for (int s = 0; s < squarings; ++s) r = mul(r, r);
    return r;
}

std::array<Complex, 6> apply_matrix(const std::array<std::array<Complex, 6>, 6>& m,
                                    const std::array<Complex, 6>& x) {
    std::array<Complex, 6> out{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out[i] += m[i][j] * x[j];
    return out;
}

}  // namespace mpns::oracle
